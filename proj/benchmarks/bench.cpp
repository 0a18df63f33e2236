#include <benchmark/benchmark.h>

#include "qorder/canonical.hpp"
#include "qorder/enumeration.hpp"
#include "qorder/exactpoly.hpp"
#include "qorder/families.hpp"
#include "qorder/partitions.hpp"
#include "qorder/spectral.hpp"

using namespace qorder;

static void BM_canonical_certificate(benchmark::State& state) {
    const Graph g = build(gv_spec(static_cast<int>(state.range(0)), 4)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_canonical_certificate)->Arg(10)->Arg(13)->Arg(16);

static void BM_q_index(benchmark::State& state) {
    const Graph g = build(gi_spec(static_cast<int>(state.range(0)), 4, 1)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(q_index(g).q);
}
BENCHMARK(BM_q_index)->Arg(10)->Arg(20)->Arg(40);

static void BM_enumerate(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graphs(m, ClassFilter::any()).size());
}
BENCHMARK(BM_enumerate)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_enumerate_girth(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graphs(m, ClassFilter::equal(4)).size());
}
BENCHMARK(BM_enumerate_girth)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_charpoly(benchmark::State& state) {
    const ParamMatrix pm = named_matrix("G13");
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(pm));
}
BENCHMARK(BM_charpoly);

static void BM_largest_root(benchmark::State& state) {
    const UnivarPoly p = named_poly("phiGv3").substitute_m(16);
    for (auto _ : state) benchmark::DoNotOptimize(largest_root(p, 15, 32));
}
BENCHMARK(BM_largest_root);

static void BM_coarsest_equitable(benchmark::State& state) {
    const Graph g = build(gi_spec(static_cast<int>(state.range(0)), 6, 2)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(coarsest_equitable(g).cells.size());
}
BENCHMARK(BM_coarsest_equitable)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
