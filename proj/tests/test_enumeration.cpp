#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qorder/canonical.hpp"
#include "qorder/enumeration.hpp"
#include "qorder/families.hpp"
#include "qorder/graph6.hpp"
#include "qorder/spectral.hpp"

using namespace qorder;

namespace {

// Independent oracle: grow connected graphs edge by edge and deduplicate with
// the brute-force isomorphism test only.  Usable up to m = 6 or so.
std::vector<Graph> naive_enumerate(int m) {
    std::vector<Graph> level = {make_graph(2, {{0, 1}})};
    for (int e = 1; e < m; ++e) {
        std::vector<Graph> next;
        auto push = [&](const Graph& g) {
            for (const auto& h : next)
                if (testutil::brute_isomorphic(g, h)) return;
            next.push_back(g);
        };
        for (const auto& g : level) {
            const int n = g.order();
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v)) push(add_edge(g, u, v));
                push(add_pendant(g, u));
            }
        }
        level = std::move(next);
    }
    return level;
}

long long naive_count(int m, const ClassFilter& f) {
    long long c = 0;
    for (const auto& g : naive_enumerate(m))
        if (f.admits(g)) ++c;
    return c;
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle for m <= 6") {
    const long long want_any[] = {1, 1, 3, 5, 12, 30};
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(count_graphs(m, ClassFilter::any()) == want_any[m - 1]);
        CHECK(naive_count(m, ClassFilter::any()) == want_any[m - 1]);
        for (int g = 3; g <= m + 1; ++g) {
            CHECK(count_graphs(m, ClassFilter::equal(g)) ==
                  naive_count(m, ClassFilter::equal(g)));
            CHECK(count_graphs(m, ClassFilter::at_least(g)) ==
                  naive_count(m, ClassFilter::at_least(g)));
        }
    }
}

TEST_CASE("small exact classes") {
    // m = 3: triangle, P_4, K_{1,3}
    const auto three = enumerate_graphs(3, ClassFilter::any());
    REQUIRE(three.size() == 3);
    bool saw_c3 = false, saw_p4 = false, saw_star = false;
    for (const auto& g : three) {
        if (isomorphic(g, cycle_graph(3))) saw_c3 = true;
        if (isomorphic(g, path_graph(4))) saw_p4 = true;
        if (isomorphic(g, star_graph(3))) saw_star = true;
    }
    CHECK((saw_c3 && saw_p4 && saw_star));

    CHECK(count_graphs(4, ClassFilter::at_least(4)) == 1);  // only C_4
    CHECK(count_graphs(5, ClassFilter::equal(3)) == 4);
    CHECK(count_graphs(5, ClassFilter::any()) == 12);
}

TEST_CASE("known counts at larger m") {
    CHECK(count_graphs(7, ClassFilter::any()) == 79);
    CHECK(count_graphs(8, ClassFilter::any()) == 227);
    CHECK(count_graphs(9, ClassFilter::any()) == 710);
}

TEST_CASE("enumeration postconditions: filter, uniqueness, determinism") {
    for (const ClassFilter& f :
         {ClassFilter::any(), ClassFilter::equal(4), ClassFilter::at_least(5)}) {
        const auto graphs = enumerate_graphs(8, f);
        std::set<Certificate> certs;
        for (const auto& g : graphs) {
            CHECK(is_connected(g));
            CHECK(g.size() == 8);
            CHECK(f.admits(g));
            CHECK(certs.insert(canonical_certificate(g)).second);  // no iso dups
        }
        // sorted by certificate, hence deterministic
        const auto again = enumerate_graphs(8, f);
        REQUIRE(again.size() == graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i)
            CHECK(graphs[i] == again[i]);
    }
    CHECK_THROWS_AS(enumerate_graphs(14, ClassFilter::any(), 14), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(13, ClassFilter::any(), 12), std::invalid_argument);
    CHECK_THROWS_AS(ClassFilter::equal(2), std::invalid_argument);
}

TEST_CASE("rank_top_k at m = 9") {
    // G(9,3): Theorem 1.3 chain leads the ranking
    const auto t = rank_top_k(9, ClassFilter::equal(3), 5);
    REQUIRE(t.rows.size() == 5);
    CHECK(t.class_size == count_graphs(9, ClassFilter::equal(3)));
    CHECK(!t.truncated);
    const char* want[] = {"G0(m=9,g=3)", "B1(m=9)", "B2(m=9)", "Gi(m=9,g=3,i=1)",
                          "Gv(m=9,g=3)"};
    for (int i = 0; i < 5; ++i) {
        REQUIRE(t.rows[i].family.has_value());
        CHECK(format_spec(*t.rows[i].family) == want[i]);
        CHECK(t.rows[i].rank == i + 1);
        if (i) CHECK(t.rows[i - 1].q > t.rows[i].q);
    }
    // q is monotone with gap bookkeeping consistent
    for (int i = 0; i + 1 < 5; ++i)
        CHECK(t.rows[i].gap == doctest::Approx(t.rows[i].q - t.rows[i + 1].q));

    // over all of G_9 the star and G0(9,3) come first (Theorem 1.4)
    const auto all = rank_top_k(9, ClassFilter::any(), 2);
    REQUIRE(all.rows.size() == 2);
    CHECK(format_spec(*all.rows[0].family) == "Star(m=9)");
    CHECK(format_spec(*all.rows[1].family) == "G0(m=9,g=3)");

    // asking beyond the class size truncates
    const auto deep = rank_top_k(4, ClassFilter::at_least(4), 10);
    CHECK(deep.truncated);
    CHECK(deep.rows.size() == 1);

    // csv shape
    const auto csv = rank_table_csv(t);
    CHECK(csv.rfind("rank,q,gap,graph6,family,delta,girth", 0) == 0);
}

TEST_CASE("verify_theorem hypothesis validation") {
    CHECK_THROWS_AS(verify_theorem("thm-1.1", 12, 3), std::invalid_argument);   // needs g >= 4
    CHECK_THROWS_AS(verify_theorem("thm-1.1", 11, 4), std::invalid_argument);   // needs m >= 3g
    CHECK_THROWS_AS(verify_theorem("thm-1.3", 8), std::invalid_argument);       // needs m >= 9
    CHECK_THROWS_AS(verify_theorem("cor-2.2", 8, 4), std::invalid_argument);    // needs m >= 3g-3
    CHECK_THROWS_AS(verify_theorem("nope", 9), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm-1.3", 20), std::invalid_argument);      // above the cap
}

TEST_CASE("verify_theorem verdicts at small parameters") {
    {
        const auto v = verify_theorem("thm-1.3", 9);
        CHECK(v.pass);
        CHECK(v.min_gap > kTheoremGapWarn);
        CHECK(v.observed.size() >= 5);
    }
    {
        const auto v = verify_theorem("thm-1.4", 9);
        CHECK(v.pass);
        CHECK(v.expected.size() == 11);
    }
    {
        // the g = 4 counterexample: a non-family graph overtakes the claimed chain
        const auto v = verify_theorem("thm-1.1", 12, 4);
        CHECK(!v.pass);
        bool mentions = false;
        for (const auto& o : v.observed)
            if (o.find("JreCCA?_C??") != std::string::npos) mentions = true;
        CHECK(mentions);
    }
    {
        const auto v = verify_theorem("lem-3.1", 12, 4);
        CHECK(!v.pass);
    }
    {
        const auto v = verify_theorem("lem-3.2", 18, 6);
        CHECK(v.pass);
    }
    {
        const auto v = verify_theorem("cor-2.3", 12, 4, 5);
        CHECK(v.pass);
    }
    {
        const auto v = verify_theorem("cor-2.4", 9);
        CHECK(v.pass);
    }
}
