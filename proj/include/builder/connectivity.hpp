// connectivity.hpp — vertex-connectivity testing: exact threshold test via
// unit-capacity max-flow on the split graph, a brute-force oracle for tiny
// graphs, and a sampled one-sided mode for very large n.
#pragma once
#include <cstdint>
#include <optional>

#include "builder/graph.hpp"

namespace builder {

struct ConnectivityVerdict {
    uint32_t k_at_least = 0;  // the threshold tested
    bool holds = false;
    bool exhaustive = true;  // false for sampled mode
    // On a negative verdict: a cutset of size <= k-1 whose removal
    // disconnects, or nullopt when |V| < k+1 (graph too small).
    std::optional<VertexSet> witness;
};

// Exact decision of "is g d-connected": |V| >= d+1, min-degree short-circuit,
// then pairwise min-cut tests reduced to a fixed minimum-degree source s
// (s against its non-neighbors, then non-adjacent pairs of neighbors of s).
// Each pair runs at most d augmenting paths.
ConnectivityVerdict is_d_connected(const AcceptedGraph& g, uint32_t d);

// Exact vertex connectivity by cutset enumeration; |V| <= 12 only.
// kappa(K_m) = m-1, kappa(disconnected) = 0.
uint32_t brute_force_connectivity(const AcceptedGraph& g);

// Min-degree gate plus max-flow on `samples` random non-adjacent pairs.
// A "holds" verdict only means no violation was found (exhaustive = false);
// a negative verdict carries a genuine witness.
ConnectivityVerdict sampled_connectivity_check(const AcceptedGraph& g, uint32_t d,
                                               uint32_t samples, uint64_t seed);

// True iff removing `cut` leaves at least two connected components among the
// remaining vertices. Used to re-check witnesses independently.
bool cutset_disconnects(const AcceptedGraph& g, const VertexSet& cut);

}  // namespace builder
