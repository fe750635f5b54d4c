#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builder/connectivity.hpp"
#include "oracles.hpp"

using namespace builder;

namespace {

AcceptedGraph cycle_graph(uint32_t n) {
    AcceptedGraph g(n);
    for (VertexId v = 0; v < n; ++v) g.add_edge(make_edge(v, (v + 1) % n));
    return g;
}

AcceptedGraph complete_graph(uint32_t n) {
    AcceptedGraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge({u, v});
    return g;
}

AcceptedGraph petersen() {
    AcceptedGraph g(10);
    for (VertexId v = 0; v < 5; ++v) {
        g.add_edge(make_edge(v, (v + 1) % 5));          // outer cycle
        g.add_edge(make_edge(5 + v, 5 + (v + 2) % 5));  // inner pentagram
        g.add_edge(make_edge(v, 5 + v));                // spokes
    }
    return g;
}

AcceptedGraph path_graph(uint32_t n) {
    AcceptedGraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge({v, v + 1});
    return g;
}

}  // namespace

TEST_CASE("C_5 is 2-connected but not 3-connected") {
    auto g = cycle_graph(5);
    CHECK(is_d_connected(g, 2).holds);
    auto verdict = is_d_connected(g, 3);
    CHECK_FALSE(verdict.holds);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->size() <= 2);
    CHECK(cutset_disconnects(g, *verdict.witness));
}

TEST_CASE("Petersen graph has connectivity exactly 3") {
    auto g = petersen();
    CHECK(brute_force_connectivity(g) == 3);
    CHECK(is_d_connected(g, 3).holds);
    auto verdict = is_d_connected(g, 4);
    CHECK_FALSE(verdict.holds);
    REQUIRE(verdict.witness.has_value());
    CHECK(cutset_disconnects(g, *verdict.witness));
}

TEST_CASE("complete graphs pass every d up to n-1") {
    for (uint32_t d = 1; d <= 5; ++d) {
        auto g = complete_graph(d + 1);
        CHECK(is_d_connected(g, d).holds);
        CHECK_FALSE(is_d_connected(g, d + 1).holds);  // too few vertices
    }
}

TEST_CASE("brute-force connectivity on known graphs") {
    auto k4 = complete_graph(4);
    CHECK(brute_force_connectivity(k4) == 3);
    auto p4 = path_graph(4);
    CHECK(brute_force_connectivity(p4) == 1);
    AcceptedGraph two_parts(5);
    two_parts.add_edge({0, 1});
    two_parts.add_edge({2, 3});
    CHECK(brute_force_connectivity(two_parts) == 0);
    CHECK_THROWS_AS(brute_force_connectivity(AcceptedGraph(13)), std::invalid_argument);
}

TEST_CASE("exact checker agrees with brute force on 1000 random graphs, d in [1,5]") {
    auto rng = make_rng(5, 3);
    for (int it = 0; it < 1000; ++it) {
        uint32_t n = 4 + static_cast<uint32_t>(uniform_below(rng, 7));  // 4..10
        auto g = oracles::random_graph(
            n, static_cast<uint32_t>(uniform_below(rng, n * (n - 1) / 2 + 1)), rng);
        uint32_t kappa = brute_force_connectivity(g);
        for (uint32_t d = 1; d <= 5; ++d) {
            auto verdict = is_d_connected(g, d);
            CHECK(verdict.holds == (kappa >= d));
            if (!verdict.holds && verdict.witness) {
                CHECK(verdict.witness->size() <= d - 1);
                CHECK(cutset_disconnects(g, *verdict.witness));
            }
        }
    }
}

TEST_CASE("monotonicity: holds at d implies holds at every smaller d") {
    auto rng = make_rng(17, 4);
    for (int it = 0; it < 100; ++it) {
        auto g = oracles::random_graph(9, static_cast<uint32_t>(uniform_below(rng, 30)), rng);
        for (uint32_t d = 2; d <= 5; ++d)
            if (is_d_connected(g, d).holds) CHECK(is_d_connected(g, d - 1).holds);
    }
}

TEST_CASE("sampled mode: min-degree gate is deterministic") {
    auto g = path_graph(6);  // endpoints have degree 1
    auto verdict = sampled_connectivity_check(g, 2, 4, 9);
    CHECK_FALSE(verdict.holds);
    REQUIRE(verdict.witness.has_value());
    CHECK(cutset_disconnects(g, *verdict.witness));
}

TEST_CASE("sampled mode on K_{d+2} holds and is marked non-exhaustive") {
    for (uint32_t d = 2; d <= 4; ++d) {
        auto g = complete_graph(d + 2);
        auto verdict = sampled_connectivity_check(g, d, 8, 3);
        CHECK(verdict.holds);
        CHECK_FALSE(verdict.exhaustive);
    }
}

TEST_CASE("exact verdicts are marked exhaustive") {
    auto g = cycle_graph(5);
    CHECK(is_d_connected(g, 2).exhaustive);
}
