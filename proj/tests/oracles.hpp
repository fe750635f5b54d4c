// oracles.hpp — independent reference implementations used only by tests.
// Everything here is deliberately written in the most literal way possible
// (powersets, set algebra, exhaustive search) and shares no code with the
// library paths it checks.
#pragma once
#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "builder/graph.hpp"
#include "builder/rng.hpp"
#include "builder/strategy_low_d.hpp"

namespace oracles {

using builder::AcceptedGraph;
using builder::Edge;
using builder::VertexId;

// Uniform G(n, m)-style random graph on n vertices with `edges` edges.
inline AcceptedGraph random_graph(uint32_t n, uint32_t edges, std::mt19937_64& rng) {
    std::vector<Edge> all;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
    for (size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[builder::uniform_below(rng, i)]);
    AcceptedGraph g(n);
    for (uint32_t i = 0; i < edges && i < all.size(); ++i) g.add_edge(all[i]);
    return g;
}

// Random graph with maximum degree at most `max_deg`.
inline AcceptedGraph random_bounded_degree_graph(uint32_t n, uint32_t max_deg,
                                                 uint32_t attempts, std::mt19937_64& rng) {
    AcceptedGraph g(n);
    for (uint32_t i = 0; i < attempts; ++i) {
        auto u = static_cast<VertexId>(builder::uniform_below(rng, n));
        auto v = static_cast<VertexId>(builder::uniform_below(rng, n));
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= max_deg || g.degree(v) >= max_deg) continue;
        g.add_edge(builder::make_edge(u, v));
    }
    return g;
}

inline bool subset_connected(const AcceptedGraph& g, const std::vector<VertexId>& s) {
    if (s.empty()) return false;
    std::set<VertexId> in(s.begin(), s.end()), seen;
    std::vector<VertexId> stack{s[0]};
    seen.insert(s[0]);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (in.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == s.size();
}

// Set-algebra external neighborhood.
inline std::vector<VertexId> neighborhood_by_union(const AcceptedGraph& g,
                                                   const std::vector<VertexId>& u) {
    std::set<VertexId> in(u.begin(), u.end()), acc;
    for (VertexId v : u)
        for (VertexId w : g.neighbors(v))
            if (!in.count(w)) acc.insert(w);
    return {acc.begin(), acc.end()};
}

// All connected sets containing root with size <= max_size, by powerset scan.
inline std::set<std::vector<VertexId>> connected_sets_powerset(const AcceptedGraph& g,
                                                               VertexId root,
                                                               uint32_t max_size) {
    std::set<std::vector<VertexId>> out;
    uint32_t n = g.n();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask >> root & 1)) continue;
        std::vector<VertexId> s;
        for (uint32_t v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (s.size() > max_size) continue;
        if (subset_connected(g, s)) out.insert(s);
    }
    return out;
}

// Union of members of every set U (connected or not) with |U| <= 6 and
// |N(U)| <= d-1, by powerset scan over the induced subgraph.
inline std::vector<VertexId> fragile_by_powerset(const AcceptedGraph& g,
                                                 const std::vector<VertexId>& scope_vtx,
                                                 uint32_t d) {
    std::set<VertexId> scope(scope_vtx.begin(), scope_vtx.end());
    std::vector<VertexId> vs(scope_vtx);
    std::set<VertexId> result;
    uint32_t k = static_cast<uint32_t>(vs.size());
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) > 6) continue;
        std::set<VertexId> u, nbr;
        for (uint32_t i = 0; i < k; ++i)
            if (mask >> i & 1) u.insert(vs[i]);
        for (VertexId v : u)
            for (VertexId w : g.neighbors(v))
                if (scope.count(w) && !u.count(w)) nbr.insert(w);
        if (nbr.size() <= d - 1)
            for (VertexId v : u) result.insert(v);
    }
    return {result.begin(), result.end()};
}

// Literal transcription of the deletion process: A seeded with vertices of
// degree <= d-2, repeatedly take the smallest active vertex whose count of
// neighbors still unexplored is <= d-2, move it to P and activate its
// unexplored neighbors. H is the subgraph induced on A u P at termination.
struct PeelSets {
    std::set<VertexId> h, leaves, g_prime;
};

inline PeelSets peel_transcription(const AcceptedGraph& g, uint32_t d,
                                   const std::vector<VertexId>& scope_vtx) {
    std::set<VertexId> scope(scope_vtx.begin(), scope_vtx.end());
    auto deg_in = [&](VertexId v, const std::set<VertexId>& s) {
        uint32_t c = 0;
        for (VertexId w : g.neighbors(v)) c += s.count(w) ? 1 : 0;
        return c;
    };
    std::set<VertexId> a, p, nset;
    for (VertexId v : scope)
        (deg_in(v, scope) <= d - 2 ? a : nset).insert(v);
    for (;;) {
        VertexId pick = UINT32_MAX;
        for (VertexId v : a)
            if (deg_in(v, nset) <= d - 2) {
                pick = v;
                break;
            }
        if (pick == UINT32_MAX) break;
        a.erase(pick);
        p.insert(pick);
        std::vector<VertexId> moved;
        for (VertexId w : g.neighbors(pick))
            if (nset.count(w)) moved.push_back(w);
        for (VertexId w : moved) {
            nset.erase(w);
            a.insert(w);
        }
    }
    PeelSets out;
    for (VertexId v : a) out.h.insert(v);
    for (VertexId v : p) out.h.insert(v);
    for (VertexId v : out.h)
        if (deg_in(v, out.h) == 1) out.leaves.insert(v);
    for (VertexId v : scope)
        if (!out.h.count(v) || out.leaves.count(v)) out.g_prime.insert(v);
    return out;
}

// Exhaustive longest simple directed cycle, for digraphs with <= ~14 nodes.
inline uint32_t longest_cycle_exhaustive(const builder::MergeDigraph& h) {
    uint32_t m = static_cast<uint32_t>(h.out.size());
    uint32_t best = 0;
    std::vector<uint8_t> used(m, 0);
    std::vector<uint32_t> stack;
    auto dfs = [&](auto&& self, uint32_t start, uint32_t cur) -> void {
        for (const auto& arc : h.out[cur]) {
            if (arc.to == start && stack.size() >= 3)
                best = std::max<uint32_t>(best, static_cast<uint32_t>(stack.size()));
            if (!used[arc.to] && arc.to > start) {  // start is the cycle minimum
                used[arc.to] = 1;
                stack.push_back(arc.to);
                self(self, start, arc.to);
                stack.pop_back();
                used[arc.to] = 0;
            }
        }
    };
    for (uint32_t s = 0; s < m; ++s) {
        used.assign(m, 0);
        used[s] = 1;
        stack = {s};
        dfs(dfs, s, s);
    }
    return best;
}

// Expected rounds for a greedy matching to grow from empty to `size` pairs
// when each round proposes a uniform edge of K_n: sum over i of
// n(n-1) / ((n-2i+2)(n-2i+1)).
inline double matching_waiting_time(uint32_t n, uint32_t size) {
    double total = 0.0;
    for (uint32_t i = 1; i <= size; ++i) {
        double a = static_cast<double>(n) - 2.0 * i + 2.0;
        double b = static_cast<double>(n) - 2.0 * i + 1.0;
        total += static_cast<double>(n) * (static_cast<double>(n) - 1.0) / (a * b);
    }
    return total;
}

}  // namespace oracles
