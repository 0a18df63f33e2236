#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "qorder/canonical.hpp"
#include "qorder/graph.hpp"
#include "qorder/graph6.hpp"

using namespace qorder;

TEST_CASE("make_graph basics") {
    const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    const Graph k2 = make_graph(2, {{0, 1}});
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);

    // duplicates collapse
    CHECK(make_graph(2, {{0, 1}, {1, 0}}).size() == 1);
}

TEST_CASE("girth") {
    CHECK(girth(path_graph(5)).is_acyclic());
    CHECK(girth(star_graph(7)).is_acyclic());
    CHECK(girth(cycle_graph(5)).value() == 5);
    CHECK(girth(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).value() == 3);

    // Petersen graph, girth 5
    std::vector<Edge> pet;
    for (int i = 0; i < 5; ++i) {
        pet.push_back({i, (i + 1) % 5});
        pet.push_back({i, i + 5});
        pet.push_back({i + 5, (i + 2) % 5 + 5});
    }
    CHECK(girth(make_graph(10, pet)).value() == 5);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cycle_graph(4)));
    const Graph two = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(two));
    CHECK(component_count(two) == 2);
    CHECK(component_count(make_graph(3, {})) == 3);
}

TEST_CASE("graph6 golden values") {
    CHECK(emit_graph6(make_graph(2, {{0, 1}})) == "A_");
    CHECK(parse_graph6("A_") == make_graph(2, {{0, 1}}));
    // optional header prefix is accepted
    CHECK(parse_graph6(">>graph6<<A_") == make_graph(2, {{0, 1}}));
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);   // truncated
    CHECK_THROWS_AS(parse_graph6("A_x"), std::invalid_argument); // trailing garbage
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) es.push_back({i, j});
        const Graph g = make_graph(n, es);
        CAPTURE(trial);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("certificate matches the all-permutations oracle") {
    // two graphs share a certificate exactly when they share the brute-force
    // minimum relabeling code
    std::mt19937 rng(7);
    const int n = 6;
    std::vector<std::pair<Certificate, std::uint64_t>> seen;
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) es.push_back({i, j});
        const Graph g = make_graph(n, es);
        seen.emplace_back(canonical_certificate(g), testutil::min_perm_code(g));
    }
    for (std::size_t a = 0; a < seen.size(); ++a)
        for (std::size_t b = a + 1; b < seen.size(); ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK((seen[a].first == seen[b].first) == (seen[a].second == seen[b].second));
        }
}

TEST_CASE("certificate is invariant under relabeling and separates classes") {
    std::mt19937 rng(99);
    const Graph base = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                      {5, 6}, {6, 0}, {0, 3}});
    const Certificate cert = canonical_certificate(base);
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> es;
        for (auto [u, v] : base.edges()) es.push_back({perm[u], perm[v]});
        CHECK(canonical_certificate(make_graph(7, es)) == cert);
    }
    // same degree sequence, different class
    const Graph other = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                       {5, 6}, {6, 0}, {0, 2}});
    CHECK(canonical_certificate(other) != cert);
    CHECK(isomorphic(base, base));
    CHECK(!isomorphic(base, other));
}

TEST_CASE("certificate limit is enforced") {
    CHECK_THROWS_AS(canonical_certificate(path_graph(17)), std::invalid_argument);
    CHECK_NOTHROW(canonical_certificate(path_graph(17), 17));
}

TEST_CASE("edit helpers") {
    Graph g = path_graph(4);
    g = add_edge(g, 0, 3);
    CHECK(girth(g).value() == 4);
    g = remove_edge(g, 1, 2);
    CHECK(girth(g).is_acyclic());
    g = add_pendant(g, 0);
    CHECK(g.order() == 5);
    CHECK(g.degree(4) == 1);
    const Graph h = remove_vertex(cycle_graph(5), 2);
    CHECK(h.order() == 4);
    CHECK(h.size() == 3);
    CHECK(is_connected(h));
}

TEST_CASE("GirthValue ordering: acyclic compares greater than any cycle") {
    CHECK(GirthValue::finite(100) < GirthValue::acyclic());
    CHECK(GirthValue::finite(3) < GirthValue::finite(4));
    CHECK(GirthValue::acyclic() == GirthValue::acyclic());
    CHECK_THROWS_AS(GirthValue::acyclic().value(), std::logic_error);
}
