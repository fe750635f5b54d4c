#include "builder/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace builder {

void AcceptedGraph::add_edge(Edge e) {
    if (e.u == e.v) throw std::invalid_argument("add_edge: self-loop");
    if (e.u >= n() || e.v >= n()) throw std::out_of_range("add_edge: vertex out of range");
    if (!edges_.insert(e.key()).second) throw std::invalid_argument("add_edge: duplicate edge");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
}

VertexSet AcceptedGraph::neighborhood(const VertexSet& u) const {
    std::vector<uint8_t> in_u(n(), 0), seen(n(), 0);
    for (VertexId v : u) in_u[v] = 1;
    VertexSet out;
    for (VertexId v : u)
        for (VertexId w : adj_[v])
            if (!in_u[w] && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

void AcceptedGraph::write_edge_list(std::ostream& out) const {
    std::vector<Edge> all;
    all.reserve(edges_.size());
    for (VertexId v = 0; v < n(); ++v)
        for (VertexId w : adj_[v])
            if (v < w) all.push_back(Edge{v, w});
    std::sort(all.begin(), all.end());
    for (const Edge& e : all) out << e.u << ' ' << e.v << '\n';
}

namespace {

struct SetEnumerator {
    const AcceptedGraph& g;
    const std::vector<uint8_t>& scope;
    uint32_t max_size;
    const std::function<void(const std::vector<VertexId>&)>& visit;
    std::vector<VertexId> cur;
    std::vector<uint8_t> touched;  // in cur, in an extension list, or passed over

    bool in_scope(VertexId v) const { return scope.empty() || scope[v]; }

    void run(VertexId root) {
        touched.assign(g.n(), 0);
        touched[root] = 1;
        cur = {root};
        std::vector<VertexId> ext;
        for (VertexId w : g.neighbors(root))
            if (in_scope(w)) {
                touched[w] = 1;
                ext.push_back(w);
            }
        rec(ext);
    }

    void rec(const std::vector<VertexId>& ext) {
        visit(cur);
        if (cur.size() == max_size) return;
        for (size_t i = 0; i < ext.size(); ++i) {
            VertexId v = ext[i];
            cur.push_back(v);
            std::vector<VertexId> next(ext.begin() + i + 1, ext.end());
            size_t first_new = next.size();
            for (VertexId w : g.neighbors(v))
                if (in_scope(w) && !touched[w]) {
                    touched[w] = 1;
                    next.push_back(w);
                }
            rec(next);
            for (size_t k = first_new; k < next.size(); ++k) touched[next[k]] = 0;
            cur.pop_back();
        }
    }
};

}  // namespace

void enumerate_connected_sets(const AcceptedGraph& g, VertexId root, uint32_t max_size,
                              const std::function<void(const std::vector<VertexId>&)>& visit,
                              const std::vector<uint8_t>& scope) {
    if (max_size < 1) throw std::invalid_argument("enumerate_connected_sets: max_size >= 1 required");
    if (!scope.empty() && !scope[root]) return;
    SetEnumerator e{g, scope, max_size, visit, {}, {}};
    e.run(root);
}

std::vector<VertexSet> connected_sets(const AcceptedGraph& g, VertexId root, uint32_t max_size) {
    std::vector<VertexSet> out;
    enumerate_connected_sets(g, root, max_size, [&](const std::vector<VertexId>& s) {
        VertexSet copy(s);
        std::sort(copy.begin(), copy.end());
        out.push_back(std::move(copy));
    });
    return out;
}

}  // namespace builder
