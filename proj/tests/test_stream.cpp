#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "builder/stream.hpp"

using namespace builder;

TEST_CASE("real mode emits every edge of K_4 exactly once over 6 calls") {
    ProposalStream s(4, 7);
    std::set<uint64_t> seen;
    for (int i = 0; i < 6; ++i) {
        Proposal p = s.next();
        CHECK(p.round == static_cast<uint64_t>(i + 1));
        CHECK(p.edge.u < p.edge.v);
        CHECK(seen.insert(p.edge.key()).second);
    }
    CHECK(s.exhausted());
    CHECK_THROWS_AS(s.next(), StreamExhausted);
}

TEST_CASE("equal (n, seed, mode) give identical sequences") {
    ProposalStream a(4, 7), b(4, 7);
    for (int i = 0; i < 6; ++i) {
        Proposal pa = a.next(), pb = b.next();
        CHECK(pa.edge == pb.edge);
    }
}

TEST_CASE("K_2 has a single forced proposal") {
    ProposalStream s(2, 123);
    Proposal p = s.next();
    CHECK(p.round == 1);
    CHECK(p.edge == Edge{0, 1});
    CHECK(s.exhausted());
}

TEST_CASE("K_3 exhausts its three edges in some order, any seed") {
    for (uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        ProposalStream s(3, seed);
        std::set<uint64_t> seen;
        for (int i = 0; i < 3; ++i) seen.insert(s.next().edge.key());
        CHECK(seen.size() == 3);
    }
}

TEST_CASE("stream rejects n < 2") {
    CHECK_THROWS_AS(ProposalStream(1, 0), std::invalid_argument);
}

TEST_CASE("auxiliary mode: 150 proposals, distinct within each block") {
    ProposalStream s(100, 1, StreamMode::auxiliary(3, 50));
    for (int phase = 1; phase <= 3; ++phase) {
        std::set<uint64_t> block;
        for (int i = 0; i < 50; ++i) {
            CHECK(s.current_phase() == static_cast<uint32_t>(phase));
            CHECK(block.insert(s.next().edge.key()).second);
        }
    }
    CHECK(s.exhausted());
}

TEST_CASE("auxiliary mode requires sane phase parameters") {
    CHECK_THROWS_AS(StreamMode::auxiliary(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(StreamMode::auxiliary(2, 0), std::invalid_argument);
}

TEST_CASE("repeated_edge_count counts edges seen in two or more phases") {
    Edge e01{0, 1}, e02{0, 2}, e12{1, 2};
    CHECK(repeated_edge_count({{1, e01}, {2, e01}}) == 1);
    CHECK(repeated_edge_count({{1, e01}, {2, e02}, {3, e12}}) == 0);
    // three phases of the same edge still count once
    CHECK(repeated_edge_count({{1, e01}, {2, e01}, {3, e01}, {1, e02}, {3, e02}}) == 2);
    // repetition within one phase does not count (cannot happen upstream)
    CHECK(repeated_edge_count({{1, e01}, {1, e01}}) == 0);
}

TEST_CASE("early proposals are uniform: fixed-edge frequency matches hypergeometric mean") {
    // each of the first k proposals is uniform without replacement, so a
    // fixed edge appears among the first k with probability k / C(n,2)
    const uint32_t n = 50;
    const int k = 50, seeds = 20000;
    const double p = static_cast<double>(k) / (n * (n - 1) / 2.0);
    const Edge probe{3, 17};
    int hits = 0;
    for (int seed = 0; seed < seeds; ++seed) {
        ProposalStream s(n, 1000 + seed);
        for (int i = 0; i < k; ++i)
            if (s.next().edge == probe) {
                ++hits;
                break;
            }
    }
    double freq = static_cast<double>(hits) / seeds;
    double se = std::sqrt(p * (1 - p) / seeds);
    CHECK(std::abs(freq - p) < 3.0 * se);
}
