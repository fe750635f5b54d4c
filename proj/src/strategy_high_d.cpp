#include "builder/strategy_high_d.hpp"

#include <algorithm>
#include <set>

namespace builder {

namespace {

enum : uint8_t { kOutside = 0, kActive = 1, kProcessed = 2, kUnexplored = 3 };

std::vector<uint8_t> mask_of(const VertexSet& vs, uint32_t n) {
    std::vector<uint8_t> m(n, 0);
    for (VertexId v : vs) m[v] = 1;
    return m;
}

uint32_t induced_degree(const AcceptedGraph& g, VertexId v, const std::vector<uint8_t>& scope) {
    uint32_t deg = 0;
    for (VertexId w : g.neighbors(v)) deg += scope[w];
    return deg;
}

}  // namespace

PeelResult peel_once(const AcceptedGraph& g, uint32_t d, const VertexSet& scope) {
    const uint32_t n = g.n();
    std::vector<uint8_t> in_scope = mask_of(scope, n);
    std::vector<uint8_t> status(n, kOutside);
    std::vector<uint32_t> unexplored_nbrs(n, 0);

    for (VertexId v : scope)
        status[v] = induced_degree(g, v, in_scope) <= d - 2 ? kActive : kUnexplored;
    for (VertexId v : scope) {
        uint32_t cnt = 0;
        for (VertexId w : g.neighbors(v)) cnt += (in_scope[w] && status[w] == kUnexplored);
        unexplored_nbrs[v] = cnt;
    }

    // Active vertices with at most d-2 unexplored neighbors, smallest first.
    std::set<VertexId> ready;
    for (VertexId v : scope)
        if (status[v] == kActive && unexplored_nbrs[v] <= d - 2) ready.insert(v);

    auto on_leaves_unexplored = [&](VertexId u) {
        // u left the unexplored region: every scoped neighbor loses one
        // unexplored neighbor, possibly becoming ready.
        for (VertexId w : g.neighbors(u)) {
            if (!in_scope[w]) continue;
            --unexplored_nbrs[w];
            if (status[w] == kActive && unexplored_nbrs[w] == d - 2) ready.insert(w);
        }
    };

    while (!ready.empty()) {
        VertexId v = *ready.begin();
        ready.erase(ready.begin());
        status[v] = kProcessed;
        for (VertexId u : g.neighbors(v)) {
            if (!in_scope[u] || status[u] != kUnexplored) continue;
            status[u] = kActive;
            on_leaves_unexplored(u);
            if (unexplored_nbrs[u] <= d - 2) ready.insert(u);
        }
    }

    PeelResult result;
    std::vector<uint8_t> in_h(n, 0);
    for (VertexId v : scope)
        if (status[v] == kActive || status[v] == kProcessed) {
            in_h[v] = 1;
            result.h_vertices.push_back(v);
        }
    for (VertexId v : result.h_vertices) {
        uint32_t deg_h = 0;
        for (VertexId w : g.neighbors(v)) deg_h += in_h[w];
        if (deg_h == 1) result.leaves.push_back(v);
    }
    std::vector<uint8_t> keep = in_scope;
    for (VertexId v : result.h_vertices) keep[v] = 0;
    for (VertexId v : result.leaves) keep[v] = 1;
    for (VertexId v : scope)
        if (keep[v]) result.g_prime_vertices.push_back(v);
    result.degenerate = result.g_prime_vertices.empty();
    return result;
}

PeelResult peel(const AcceptedGraph& g, uint32_t d) {
    VertexSet scope(g.n());
    for (VertexId v = 0; v < g.n(); ++v) scope[v] = v;

    PeelResult last;
    for (;;) {
        last = peel_once(g, d, scope);
        if (last.degenerate) break;
        auto core_mask = mask_of(last.g_prime_vertices, g.n());
        uint32_t min_deg = UINT32_MAX;
        for (VertexId v : last.g_prime_vertices)
            min_deg = std::min(min_deg, induced_degree(g, v, core_mask));
        if (min_deg >= d - 1) break;
        scope = last.g_prime_vertices;
    }
    // Report H relative to the whole vertex set so that V \ (H \ L) is the
    // final core even after several passes.
    if (!last.degenerate) {
        auto core_mask = mask_of(last.g_prime_vertices, g.n());
        auto leaf_mask = mask_of(last.leaves, g.n());
        last.h_vertices.clear();
        for (VertexId v = 0; v < g.n(); ++v)
            if (!core_mask[v] || leaf_mask[v]) last.h_vertices.push_back(v);
    } else {
        last.h_vertices.resize(g.n());
        for (VertexId v = 0; v < g.n(); ++v) last.h_vertices[v] = v;
        last.leaves.clear();
        last.g_prime_vertices.clear();
    }
    return last;
}

VertexSet find_fragile(const AcceptedGraph& g, const VertexSet& g_prime, uint32_t d) {
    const uint32_t n = g.n();
    auto scope = mask_of(g_prime, n);
    std::vector<uint8_t> fragile(n, 0);

    // Boundary size maintained incrementally while sets grow: nbr_count[w] is
    // the number of set members adjacent to w (w outside the set).
    std::vector<uint32_t> nbr_count(n, 0);
    std::vector<uint8_t> touched(n, 0);

    for (VertexId root : g_prime) {
        if (fragile[root]) continue;  // any witness through root is reachable
                                      // from its still-unmarked members
        uint32_t boundary = 0;
        std::vector<VertexId> cur;
        std::vector<uint8_t> in_cur(n, 0);

        auto add = [&](VertexId v) {
            if (nbr_count[v] > 0) --boundary;  // v was on the boundary
            cur.push_back(v);
            in_cur[v] = 1;
            for (VertexId w : g.neighbors(v))
                if (scope[w] && !in_cur[w] && nbr_count[w]++ == 0) ++boundary;
        };
        auto remove = [&](VertexId v) {
            cur.pop_back();
            in_cur[v] = 0;
            for (VertexId w : g.neighbors(v))
                if (scope[w] && !in_cur[w] && --nbr_count[w] == 0) --boundary;
            if (nbr_count[v] > 0) ++boundary;
        };

        std::function<void(const std::vector<VertexId>&)> rec =
            [&](const std::vector<VertexId>& ext) {
                if (boundary <= d - 1)
                    for (VertexId v : cur) fragile[v] = 1;
                if (cur.size() == 6) return;
                for (size_t i = 0; i < ext.size(); ++i) {
                    VertexId v = ext[i];
                    add(v);
                    std::vector<VertexId> next(ext.begin() + i + 1, ext.end());
                    for (VertexId w : g.neighbors(v))
                        if (scope[w] && !in_cur[w] && !touched[w]) {
                            touched[w] = 1;
                            next.push_back(w);
                        }
                    rec(next);
                    for (size_t k = ext.size() - i - 1; k < next.size(); ++k) touched[next[k]] = 0;
                    remove(v);
                }
            };

        std::fill(touched.begin(), touched.end(), 0);
        touched[root] = 1;
        add(root);
        std::vector<VertexId> ext;
        for (VertexId w : g.neighbors(root))
            if (scope[w]) {
                touched[w] = 1;
                ext.push_back(w);
            }
        rec(ext);
        remove(root);
    }

    VertexSet out;
    for (VertexId v = 0; v < n; ++v)
        if (fragile[v]) out.push_back(v);
    return out;
}

NeedsMap plan_needs(const AcceptedGraph& g, const VertexSet& g_prime, const VertexSet& fragile,
                    uint32_t d) {
    NeedsMap needs;
    needs.core = mask_of(g_prime, g.n());
    for (VertexId v : fragile) needs.need[v] = d + 5;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!needs.core[v]) needs.need[v] = d;
    return needs;
}

namespace {

bool serves(const NeedsMap& needs, const AcceptedGraph& g, VertexId w, VertexId other) {
    auto it = needs.need.find(w);
    if (it == needs.need.end() || it->second == 0) return false;
    return needs.core[other] && other != w && !g.has_edge(w, other);
}

}  // namespace

Decision boost_decision(const NeedsMap& needs, const AcceptedGraph& g, Edge e) {
    return (serves(needs, g, e.u, e.v) || serves(needs, g, e.v, e.u)) ? Decision::Accept
                                                                      : Decision::Reject;
}

HighDStrategy::HighDStrategy(const PhasePlan& plan, const AcceptedGraph& graph,
                             const BudgetLedger& ledger)
    : plan_(plan), graph_(graph), ledger_(ledger), matching_(graph.n()) {
    for (const auto& ph : plan_.phases) stages_.push_back({ph.name, 0, 0});
}

uint32_t HighDStrategy::phase_of(uint64_t round) const {
    if (plan_.matching_len == 0) return plan_.d;
    uint64_t idx = (round - 1) / plan_.matching_len;
    return idx >= plan_.d ? plan_.d : static_cast<uint32_t>(idx);
}

void HighDStrategy::enter_boost() {
    peel_ = peel(graph_, plan_.d);
    fragile_ = find_fragile(graph_, peel_.g_prime_vertices, plan_.d);
    needs_ = plan_needs(graph_, peel_.g_prime_vertices, fragile_, plan_.d);
    boost_prepared_ = true;
}

Decision HighDStrategy::decide(uint64_t round, Edge e) {
    uint32_t phase = phase_of(round);
    if (phase != current_phase_) {
        if (current_phase_ < plan_.d) matching_.reset();
        current_phase_ = phase;
    }
    if (phase < plan_.d) {
        stages_[phase].rounds++;
        // auxiliary mode can re-propose an edge accepted in an earlier phase
        if (matching_.eligible(e) && !graph_.has_edge(e.u, e.v) && ledger_.can_accept())
            return Decision::Accept;
        return Decision::Reject;
    }
    if (!boost_prepared_) enter_boost();
    stages_[plan_.d].rounds++;
    if (!ledger_.can_accept()) return Decision::Reject;
    return boost_decision(needs_, graph_, e);
}

void HighDStrategy::on_accepted(uint64_t round, Edge e) {
    uint32_t phase = phase_of(round);
    if (phase < plan_.d) {
        matching_.mark(e);
        stages_[phase].accepts++;
        return;
    }
    stages_[plan_.d].accepts++;
    auto serve = [&](VertexId w, VertexId other) {
        // graph_ already contains e, so eligibility is rechecked against the
        // pre-acceptance adjacency by ignoring this very edge
        auto it = needs_.need.find(w);
        if (it == needs_.need.end() || it->second == 0) return;
        if (needs_.core[other] && other != w) --it->second;
    };
    serve(e.u, e.v);
    serve(e.v, e.u);
}

void HighDStrategy::finalize(TrialReport& report) {
    if (!boost_prepared_ && report.rounds_used >= plan_.matching_len * plan_.d && plan_.d > 0)
        enter_boost();  // run ended exactly at the matching/boost boundary
    report.stages = stages_;
    report.h_size = peel_.h_vertices.size();
    report.fragile_count = fragile_.size();
    report.outside_count = graph_.n() - peel_.g_prime_vertices.size();
    report.degenerate_peel = peel_.degenerate;
    if (peel_.degenerate) report.failed_stage = "degenerate-peel";
    report.needs_satisfied = boost_prepared_ && needs_.all_satisfied();

    if (!peel_.degenerate && boost_prepared_) {
        std::vector<uint8_t> core(graph_.n(), 0);
        for (VertexId v : peel_.g_prime_vertices) core[v] = 1;
        uint32_t min_deg = UINT32_MAX;
        for (VertexId v : peel_.g_prime_vertices) {
            uint32_t deg = 0;
            for (VertexId w : graph_.neighbors(v)) deg += core[w];
            min_deg = std::min(min_deg, deg);
        }
        report.gprime_min_deg_ok = peel_.g_prime_vertices.empty() || min_deg >= plan_.d - 1;
    }
}

}  // namespace builder
