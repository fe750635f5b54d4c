#include "builder/connectivity.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <queue>
#include <stdexcept>

#include "builder/rng.hpp"

namespace builder {

namespace {

// Unit-capacity flow network on the vertex-split digraph:
// node in(v) = 2v, out(v) = 2v+1; internal arc in->out carries the vertex
// capacity, each undirected edge {u,v} contributes out_u->in_v and out_v->in_u.
class SplitFlow {
public:
    explicit SplitFlow(const AcceptedGraph& g) : n_(g.n()) {
        head_.assign(2 * n_, -1);
        for (VertexId v = 0; v < n_; ++v) add_arc(in(v), out(v));
        for (VertexId v = 0; v < n_; ++v)
            for (VertexId w : g.neighbors(v))
                if (v < w) {
                    add_arc(out(v), in(w));
                    add_arc(out(w), in(v));
                }
    }

    // Max-flow from out(s) to in(t), stopping once `cap` paths are found.
    // Internal arcs of s and t are irrelevant because the source is out(s)
    // and the sink is in(t).
    uint32_t max_flow_capped(VertexId s, VertexId t, uint32_t cap) {
        for (auto& c : arc_cap_) c = 1;
        for (size_t i = 1; i < arc_cap_.size(); i += 2) arc_cap_[i] = 0;  // residual twins
        src_ = out(s);
        dst_ = in(t);
        uint32_t flow = 0;
        while (flow < cap && augment()) ++flow;
        return flow;
    }

    // After a capped run that came up short, the min cut consists of the
    // vertices whose internal arc crosses the residual-reachable frontier.
    VertexSet min_cut_vertices(VertexId s, VertexId t) const {
        std::vector<uint8_t> reach(2 * n_, 0);
        std::deque<int> q{src_};
        reach[src_] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int a = head_[x]; a != -1; a = next_[a])
                if (arc_cap_[a] > 0 && !reach[to_[a]]) {
                    reach[to_[a]] = 1;
                    q.push_back(to_[a]);
                }
        }
        VertexSet cut;
        for (VertexId v = 0; v < n_; ++v)
            if (v != s && v != t && reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        return cut;
    }

private:
    static int in(VertexId v) { return 2 * static_cast<int>(v); }
    static int out(VertexId v) { return 2 * static_cast<int>(v) + 1; }

    void add_arc(int from, int dest) {
        to_.push_back(dest);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        next_.push_back(head_[dest]);
        head_[dest] = static_cast<int>(to_.size()) - 1;
        arc_cap_.push_back(1);
        arc_cap_.push_back(0);
    }

    bool augment() {
        std::vector<int> pred_arc(2 * n_, -1);
        std::deque<int> q{src_};
        std::vector<uint8_t> seen(2 * n_, 0);
        seen[src_] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == dst_) break;
            for (int a = head_[x]; a != -1; a = next_[a]) {
                int y = to_[a];
                if (arc_cap_[a] > 0 && !seen[y]) {
                    seen[y] = 1;
                    pred_arc[y] = a;
                    q.push_back(y);
                }
            }
        }
        if (!seen[dst_]) return false;
        for (int x = dst_; x != src_;) {
            int a = pred_arc[x];
            arc_cap_[a] -= 1;
            arc_cap_[a ^ 1] += 1;
            x = to_[a ^ 1];
        }
        return true;
    }

    uint32_t n_;
    int src_ = 0, dst_ = 0;
    std::vector<int> head_, next_, to_;
    std::vector<int8_t> arc_cap_;
};

bool adjacent(const AcceptedGraph& g, VertexId a, VertexId b) { return g.has_edge(a, b); }

std::optional<ConnectivityVerdict> small_or_degree_gate(const AcceptedGraph& g, uint32_t d) {
    ConnectivityVerdict verdict;
    verdict.k_at_least = d;
    if (g.n() < d + 1) {
        verdict.holds = false;
        verdict.witness = std::nullopt;  // graph too small, no cutset to show
        return verdict;
    }
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.degree(v) < d) {
            verdict.holds = false;
            VertexSet w(g.neighbors(v).begin(), g.neighbors(v).end());
            std::sort(w.begin(), w.end());
            verdict.witness = std::move(w);
            return verdict;
        }
    return std::nullopt;
}

// Tests one pair; on failure fills the verdict with the min cut.
bool pair_ok(SplitFlow& flow, VertexId a, VertexId b, uint32_t d, ConnectivityVerdict& verdict) {
    if (flow.max_flow_capped(a, b, d) >= d) return true;
    verdict.holds = false;
    verdict.witness = flow.min_cut_vertices(a, b);
    return false;
}

}  // namespace

ConnectivityVerdict is_d_connected(const AcceptedGraph& g, uint32_t d) {
    if (d < 1) throw std::invalid_argument("is_d_connected: d >= 1 required");
    if (auto gate = small_or_degree_gate(g, d)) return *gate;

    ConnectivityVerdict verdict;
    verdict.k_at_least = d;
    verdict.holds = true;

    VertexId s = 0;
    for (VertexId v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(s)) s = v;

    SplitFlow flow(g);
    // A minimum cutset avoiding s separates s from some non-neighbor.
    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == s || adjacent(g, s, v)) continue;
        if (!pair_ok(flow, s, v, d, verdict)) return verdict;
    }
    // A minimum cutset through s leaves two neighbors of s in different
    // components; those neighbors are non-adjacent.
    auto nbrs = g.neighbors(s);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            if (adjacent(g, nbrs[i], nbrs[j])) continue;
            if (!pair_ok(flow, nbrs[i], nbrs[j], d, verdict)) return verdict;
        }
    return verdict;
}

uint32_t brute_force_connectivity(const AcceptedGraph& g) {
    const uint32_t n = g.n();
    if (n > 12) throw std::invalid_argument("brute_force_connectivity: |V| <= 12 only");
    if (n <= 1) return 0;

    auto connected_without = [&](uint32_t removed_mask) {
        uint32_t start = UINT32_MAX;
        for (uint32_t v = 0; v < n; ++v)
            if (!(removed_mask >> v & 1)) {
                start = v;
                break;
            }
        if (start == UINT32_MAX) return true;
        uint32_t seen = 1u << start;
        std::vector<VertexId> stack{start};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v))
                if (!(removed_mask >> w & 1) && !(seen >> w & 1)) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
        }
        for (uint32_t v = 0; v < n; ++v)
            if (!(removed_mask >> v & 1) && !(seen >> v & 1)) return false;
        return true;
    };

    for (uint32_t size = 0; size + 2 <= n; ++size) {
        // all masks with popcount == size
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<uint32_t>(__builtin_popcount(mask)) != size) continue;
            if (!connected_without(mask)) return size;
        }
    }
    return n - 1;
}

ConnectivityVerdict sampled_connectivity_check(const AcceptedGraph& g, uint32_t d,
                                               uint32_t samples, uint64_t seed) {
    if (auto gate = small_or_degree_gate(g, d)) return *gate;

    ConnectivityVerdict verdict;
    verdict.k_at_least = d;
    verdict.holds = true;
    verdict.exhaustive = false;

    SplitFlow flow(g);
    auto rng = make_rng(seed, 0xC0DE);
    for (uint32_t i = 0; i < samples; ++i) {
        VertexId a = 0, b = 0;
        bool found = false;
        for (int tries = 0; tries < 64; ++tries) {
            a = static_cast<VertexId>(uniform_below(rng, g.n()));
            b = static_cast<VertexId>(uniform_below(rng, g.n()));
            if (a != b && !adjacent(g, a, b)) {
                found = true;
                break;
            }
        }
        if (!found) continue;  // dense graph, nothing informative to sample
        if (!pair_ok(flow, a, b, d, verdict)) return verdict;
    }
    return verdict;
}

bool cutset_disconnects(const AcceptedGraph& g, const VertexSet& cut) {
    std::vector<uint8_t> removed(g.n(), 0);
    for (VertexId v : cut) removed[v] = 1;
    VertexId start = UINT32_MAX;
    uint32_t remaining = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!removed[v]) {
            if (start == UINT32_MAX) start = v;
            ++remaining;
        }
    if (remaining < 2) return false;
    std::vector<uint8_t> seen(g.n(), 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    uint32_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached < remaining;
}

}  // namespace builder
