// strategy_low_d.hpp — Builder's strategy for d in {2, 3}: grow vertex-disjoint
// paths, merge most of them into one long cycle through an auxiliary digraph
// on path indices, then finish to d-connectivity over that skeleton.
#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "builder/graph.hpp"
#include "builder/phase_plan.hpp"
#include "builder/strategy.hpp"

namespace builder {

// N vertex-disjoint paths, each grown only at its tail (the last added
// vertex). Paths are seeded with vertices 0..N-1.
class PathSystem {
public:
    PathSystem(uint32_t n, uint32_t path_count);

    uint32_t covered() const { return covered_; }
    uint32_t path_count() const { return static_cast<uint32_t>(paths_.size()); }
    const std::vector<VertexId>& path(uint32_t i) const { return paths_[i]; }
    bool on_some_path(VertexId v) const { return path_of_[v] != kNone; }

    // Accept iff exactly one endpoint is a current tail and the other lies
    // outside every path.
    Decision consider(Edge e) const;
    void apply(Edge e);  // must follow a successful consider

private:
    static constexpr uint32_t kNone = UINT32_MAX;
    std::vector<std::vector<VertexId>> paths_;
    std::vector<uint32_t> path_of_;     // per vertex, kNone if outside
    std::vector<uint8_t> is_tail_;      // per vertex
    uint32_t covered_ = 0;
};

// Path indices whose length (vertex count) lies in [lo, hi].
std::vector<uint32_t> select_typical_paths(const PathSystem& ps, uint32_t lo, uint32_t hi);
// The asymptotic window [omega^3, 3*omega^3].
std::vector<uint32_t> select_typical_paths(const PathSystem& ps, double omega);

// Head/tail windows of the typical paths: S'_i = first w vertices,
// S''_i = last w vertices. Disjoint inside a path whenever 2w <= length.
struct EndpointWindows {
    uint32_t window = 0;
    std::vector<uint32_t> typical;                      // path indices, dense order
    std::unordered_map<VertexId, uint32_t> head_of;     // vertex -> dense typical index
    std::unordered_map<VertexId, uint32_t> tail_of;
};

EndpointWindows make_windows(const PathSystem& ps, const std::vector<uint32_t>& typical,
                             uint32_t window);

// Digraph on dense typical-path indices; arc i->j carries the accepted edge
// (u in S'_i, v in S''_j) that realized it. When several proposals realize
// the same arc, the one wasting the fewest window vertices is kept.
struct MergeDigraph {
    struct Arc {
        uint32_t to;
        Edge realizing;
    };
    std::vector<std::vector<Arc>> out;  // by dense index

    uint64_t arc_count() const {
        uint64_t s = 0;
        for (const auto& a : out) s += a.size();
        return s;
    }
    bool has_arc(uint32_t i, uint32_t j) const {
        for (const auto& a : out[i])
            if (a.to == j) return true;
        return false;
    }
};

// Directed cycle of H covering as many vertices as practical: maximum
// bipartite matching between out- and in-copies yields a path/cycle cover,
// cycles are then patched pairwise (two arcs swapped for two cross arcs)
// to a fixpoint, and the longest cycle wins. A greedy depth-first search
// fallback runs when the cover route stays below `target_len`.
// Empty result when H has no directed cycle of length >= 3.
std::vector<uint32_t> long_cycle_in_digraph(const MergeDigraph& h, uint32_t target_len);

// True iff seq is a simple directed cycle of h with length >= 3.
bool is_valid_digraph_cycle(const MergeDigraph& h, const std::vector<uint32_t>& seq);

// The assembled cycle in the accepted graph plus the d = 3 bookkeeping
// around it.
struct SkeletonCycle {
    std::vector<VertexId> sequence;  // consecutive entries adjacent, circular
    std::vector<uint8_t> on_cycle;   // by vertex
    std::vector<uint32_t> pos;       // vertex -> index in sequence (UINT32_MAX off-cycle)
};

// Walks each used path from its realized tail-window entry back to its
// head-window exit and splices the realizing edges in between. Throws
// std::logic_error if any consecutive pair is not adjacent in g.
SkeletonCycle assemble_graph_cycle(const std::vector<uint32_t>& cycle, const MergeDigraph& h,
                                   const EndpointWindows& w, const PathSystem& ps,
                                   const AcceptedGraph& g);

// P(v) for every cycle vertex of degree 2 in the restriction "chat" of the
// graph to C u S: the maximal run of degree-2 cycle vertices around v plus
// the two bounding degree-3 vertices. Empty result (flagged) when no cycle
// vertex has degree >= 3.
struct CompletionPaths {
    bool valid = false;
    // per cycle position: id of the run the vertex belongs to, or UINT32_MAX
    std::vector<uint32_t> run_of;
    // run id -> [first_pos, last_pos] of the full P-path (delimiters included)
    std::vector<std::pair<uint32_t, uint32_t>> runs;
};

CompletionPaths compute_completion_paths(const SkeletonCycle& sc,
                                         const std::vector<uint32_t>& deg_in_chat);

class LowDStrategy final : public Strategy {
public:
    LowDStrategy(const PhasePlan& plan, const AcceptedGraph& graph, const BudgetLedger& ledger);

    Decision decide(uint64_t round, Edge e) override;
    void on_accepted(uint64_t round, Edge e) override;
    void finalize(TrialReport& report) override;

    const PathSystem& paths() const { return paths_; }

private:
    enum class Stage { Paths, Merge, Tri1, Tri2, Tri3, Finish, Halted };

    void start_merge(uint64_t round);
    void start_post_merge(uint64_t round);  // d=2 attach / d=3 tri phases
    void start_completion(uint64_t round);  // d=3 only
    void halt(uint64_t round, const std::string& reason);
    void advance(uint64_t round);
    bool finish_serves(VertexId w, VertexId other) const;
    void record_arc(uint32_t from, uint32_t to, VertexId head_v, VertexId tail_v, Edge e);
    StageStat& stat(const char* name);

    const PhasePlan& plan_;
    const AcceptedGraph& graph_;
    const BudgetLedger& ledger_;

    Stage stage_ = Stage::Paths;
    uint64_t stage_end_ = 0;  // current stage's last round (adaptive chaining)
    std::string failed_stage_;

    PathSystem paths_;
    EndpointWindows windows_;
    MergeDigraph digraph_;
    std::vector<uint32_t> cycle_;
    SkeletonCycle skeleton_;

    // d == 3
    std::vector<uint8_t> arc_of_;  // 1..3 for cycle arcs V1..V3, 4 for V4, 0 otherwise
    std::vector<uint8_t> tri_matched_;  // per vertex, bit p set when matched in tri phase p
    CompletionPaths completion_;
    std::vector<uint8_t> in_chat_;
    std::vector<uint32_t> deg_chat_;  // cycle/S vertices only
    uint64_t deg2_in_chat_ = 0;
    bool chat_nonempty_ = false;

    // final phase needs
    std::unordered_map<VertexId, uint32_t> need_;
    bool needs_ready_ = false;

    std::vector<StageStat> stages_;
    uint64_t typical_count_ = 0;
};

}  // namespace builder
