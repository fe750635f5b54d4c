// edge.hpp — canonical undirected edges of K_n, 0-based vertex ids.
#pragma once
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace builder {

using VertexId = uint32_t;

struct Edge {
    VertexId u = 0;  // invariant: u < v
    VertexId v = 0;

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }

    uint64_t key() const { return (static_cast<uint64_t>(u) << 32) | v; }
};

inline Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("self-loop");
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct EdgeHash {
    size_t operator()(const Edge& e) const { return std::hash<uint64_t>{}(e.key()); }
};

}  // namespace builder
