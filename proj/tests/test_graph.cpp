#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "builder/graph.hpp"
#include "oracles.hpp"

using namespace builder;

TEST_CASE("add_edge maintains degrees and the degree-sum identity") {
    AcceptedGraph g(3);
    g.add_edge({0, 1});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 0);
    CHECK_THROWS_AS(g.add_edge({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(Edge{1, 1}), std::invalid_argument);
}

TEST_CASE("complete graph on 4 vertices") {
    AcceptedGraph g(4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) g.add_edge({u, v});
    CHECK(g.edge_count() == 6);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
    auto rng = make_rng(11, 0);
    for (int it = 0; it < 200; ++it) {
        auto g = oracles::random_graph(10, static_cast<uint32_t>(uniform_below(rng, 30)), rng);
        uint64_t sum = 0;
        for (VertexId v = 0; v < g.n(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("neighborhood on a path excludes the set itself") {
    AcceptedGraph g(3);
    g.add_edge({0, 1});
    g.add_edge({1, 2});
    CHECK(g.neighborhood({1}) == VertexSet{0, 2});
    CHECK(g.neighborhood({0, 1, 2}).empty());
}

TEST_CASE("neighborhood matches set-union oracle on random graphs") {
    auto rng = make_rng(42, 1);
    for (int it = 0; it < 10000; ++it) {
        uint32_t n = 4 + static_cast<uint32_t>(uniform_below(rng, 5));  // 4..8
        auto g = oracles::random_graph(n, static_cast<uint32_t>(uniform_below(rng, n * 2)), rng);
        VertexSet u;
        for (VertexId v = 0; v < n; ++v)
            if (uniform_below(rng, 2)) u.push_back(v);
        if (u.empty()) u.push_back(0);
        CHECK(g.neighborhood(u) == oracles::neighborhood_by_union(g, u));
    }
}

TEST_CASE("connected-set enumeration: isolated root yields only itself") {
    AcceptedGraph g(4);
    auto sets = connected_sets(g, 2, 6);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == VertexSet{2});
}

TEST_CASE("connected-set enumeration on a triangle, size 2") {
    AcceptedGraph g(3);
    g.add_edge({0, 1});
    g.add_edge({0, 2});
    g.add_edge({1, 2});
    auto sets = connected_sets(g, 0, 2);
    std::set<VertexSet> got(sets.begin(), sets.end());
    std::set<VertexSet> want{{0}, {0, 1}, {0, 2}};
    CHECK(got == want);
}

TEST_CASE("connected-set enumeration matches powerset oracle, no duplicates") {
    auto rng = make_rng(7, 2);
    for (int it = 0; it < 300; ++it) {
        uint32_t n = 5 + static_cast<uint32_t>(uniform_below(rng, 6));  // 5..10
        auto g = oracles::random_graph(n, static_cast<uint32_t>(uniform_below(rng, 2 * n)), rng);
        auto root = static_cast<VertexId>(uniform_below(rng, n));
        uint32_t max_size = 1 + static_cast<uint32_t>(uniform_below(rng, 4));  // 1..4
        auto sets = connected_sets(g, root, max_size);
        std::set<VertexSet> got(sets.begin(), sets.end());
        CHECK(got.size() == sets.size());  // emitted exactly once each
        CHECK(got == oracles::connected_sets_powerset(g, root, max_size));
    }
}

TEST_CASE("edge list export is sorted and 0-based") {
    AcceptedGraph g(4);
    g.add_edge({2, 3});
    g.add_edge({0, 3});
    g.add_edge({0, 1});
    std::ostringstream out;
    g.write_edge_list(out);
    CHECK(out.str() == "0 1\n0 3\n2 3\n");
}
