// graph.hpp — Builder's accepted graph plus the structural queries the
// strategies lean on (external neighborhoods, connected-set enumeration).
#pragma once
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <unordered_set>
#include <vector>

#include "builder/edge.hpp"

namespace builder {

// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<VertexId>;

class AcceptedGraph {
public:
    explicit AcceptedGraph(uint32_t n) : adj_(n) {}

    uint32_t n() const { return static_cast<uint32_t>(adj_.size()); }
    uint64_t edge_count() const { return edges_.size(); }
    uint32_t degree(VertexId v) const { return static_cast<uint32_t>(adj_[v].size()); }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }

    bool has_edge(VertexId a, VertexId b) const {
        if (a == b) return false;
        return edges_.count(make_edge(a, b).key()) != 0;
    }

    // Rejects self-loops and duplicates; the real stream never proposes a
    // repeat, but auxiliary mode and tests can.
    void add_edge(Edge e);

    // External neighborhood: union of neighbors of U, minus U itself.
    VertexSet neighborhood(const VertexSet& u) const;

    // One "u v" pair per line, 0-based, u < v, lexicographically sorted.
    void write_edge_list(std::ostream& out) const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::unordered_set<uint64_t> edges_;
};

// Visits every connected vertex set of size <= max_size that contains root,
// each exactly once. `scope`, when non-empty, restricts both the sets and the
// adjacency to the induced subgraph on scope (size n, 0/1 per vertex).
// Enumeration extends a set only through neighbors not previously passed
// over on the current branch, which is what makes each set unique.
void enumerate_connected_sets(const AcceptedGraph& g, VertexId root, uint32_t max_size,
                              const std::function<void(const std::vector<VertexId>&)>& visit,
                              const std::vector<uint8_t>& scope = {});

// Convenience collector for tests and small instances.
std::vector<VertexSet> connected_sets(const AcceptedGraph& g, VertexId root, uint32_t max_size);

}  // namespace builder
