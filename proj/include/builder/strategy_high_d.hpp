// strategy_high_d.hpp — Builder's strategy for d >= 4: d consecutive greedy
// matching phases, peeling of low-degree vertices, local obstruction
// detection, and a final boost phase that wires needy vertices into the core.
#pragma once
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "builder/graph.hpp"
#include "builder/phase_plan.hpp"
#include "builder/strategy.hpp"

namespace builder {

// One greedy matching iteration: accept every edge whose endpoints are both
// still unmatched in this phase.
class MatchingState {
public:
    explicit MatchingState(uint32_t n) : matched_(n, 0) {}

    bool eligible(Edge e) const { return !matched_[e.u] && !matched_[e.v]; }
    void mark(Edge e) {
        matched_[e.u] = 1;
        matched_[e.v] = 1;
        edges_.push_back(e);
        ++size_;
    }
    void reset() {
        std::fill(matched_.begin(), matched_.end(), 0);
        edges_.clear();
        size_ = 0;
    }
    uint64_t size() const { return size_; }
    uint32_t unmatched_count() const {
        return static_cast<uint32_t>(matched_.size()) - 2 * static_cast<uint32_t>(size_);
    }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<uint8_t> matched_;
    std::vector<Edge> edges_;
    uint64_t size_ = 0;
};

struct PeelResult {
    VertexSet h_vertices;        // explored subgraph H (includes its leaves)
    VertexSet leaves;            // degree-1 vertices of H that survive into the core
    VertexSet g_prime_vertices;  // V \ (H \ leaves); min induced degree >= d-1
    bool degenerate = false;     // core emptied out
};

// One pass of the exploration process: seeds A with every vertex of degree
// <= d-2 inside `scope`, repeatedly takes the smallest active vertex with at
// most d-2 neighbors still unexplored and explores it. Returns H = A u P,
// its leaves, and the remainder.
PeelResult peel_once(const AcceptedGraph& g, uint32_t d, const VertexSet& scope);

// Re-runs the pass on the induced remainder until its minimum induced degree
// reaches d-1 (or it empties, which flags the trial as degenerate).
PeelResult peel(const AcceptedGraph& g, uint32_t d);

// Union of all connected sets U with |U| <= 6 and |N(U)| <= d-1 in the graph
// induced on `g_prime`. Inclusion-minimal witnesses are connected, so rooting
// the enumeration at every vertex is exhaustive.
VertexSet find_fragile(const AcceptedGraph& g, const VertexSet& g_prime, uint32_t d);

struct NeedsMap {
    // need > 0 entries only; eligibility is "inside the core, not self, not
    // already adjacent" and for core members additionally excludes nothing
    // else (current adjacency is checked live against the graph).
    std::unordered_map<VertexId, uint32_t> need;
    std::vector<uint8_t> core;  // g_prime membership by vertex

    bool all_satisfied() const {
        for (const auto& [v, k] : need)
            if (k > 0) return false;
        return true;
    }
    uint64_t total_outstanding() const {
        uint64_t s = 0;
        for (const auto& [v, k] : need) s += k;
        return s;
    }
};

// Fragile core vertices get d+5 fresh core neighbors, vertices outside the
// core get d; everyone else needs nothing.
NeedsMap plan_needs(const AcceptedGraph& g, const VertexSet& g_prime, const VertexSet& fragile,
                    uint32_t d);

// Accept iff some endpoint has outstanding need and the other lies in its
// eligible set; serves both endpoints when both qualify.
Decision boost_decision(const NeedsMap& needs, const AcceptedGraph& g, Edge e);

class HighDStrategy final : public Strategy {
public:
    HighDStrategy(const PhasePlan& plan, const AcceptedGraph& graph, const BudgetLedger& ledger);

    Decision decide(uint64_t round, Edge e) override;
    void on_accepted(uint64_t round, Edge e) override;
    void finalize(TrialReport& report) override;

    const NeedsMap& needs() const { return needs_; }
    const PeelResult& peel_result() const { return peel_; }

private:
    uint32_t phase_of(uint64_t round) const;  // 0..d-1 matchings, d = boost
    void enter_boost();

    const PhasePlan& plan_;
    const AcceptedGraph& graph_;
    const BudgetLedger& ledger_;
    MatchingState matching_;
    uint32_t current_phase_ = 0;
    bool boost_prepared_ = false;
    PeelResult peel_;
    VertexSet fragile_;
    NeedsMap needs_;
    std::vector<StageStat> stages_;
};

}  // namespace builder
