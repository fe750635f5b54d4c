#include "builder/strategy_low_d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace builder {

PathSystem::PathSystem(uint32_t n, uint32_t path_count)
    : path_of_(n, kNone), is_tail_(n, 0) {
    if (path_count < 1 || path_count > n)
        throw std::invalid_argument("path system: need 1 <= path_count <= n");
    paths_.resize(path_count);
    for (uint32_t i = 0; i < path_count; ++i) {
        paths_[i] = {i};
        path_of_[i] = i;
        is_tail_[i] = 1;
    }
    covered_ = path_count;
}

Decision PathSystem::consider(Edge e) const {
    bool u_out = path_of_[e.u] == kNone;
    bool v_out = path_of_[e.v] == kNone;
    if (u_out == v_out) return Decision::Reject;           // need exactly one outside
    VertexId inside = u_out ? e.v : e.u;
    return is_tail_[inside] ? Decision::Accept : Decision::Reject;
}

void PathSystem::apply(Edge e) {
    bool u_out = path_of_[e.u] == kNone;
    VertexId outside = u_out ? e.u : e.v;
    VertexId tail = u_out ? e.v : e.u;
    uint32_t p = path_of_[tail];
    is_tail_[tail] = 0;
    paths_[p].push_back(outside);
    path_of_[outside] = p;
    is_tail_[outside] = 1;
    ++covered_;
}

std::vector<uint32_t> select_typical_paths(const PathSystem& ps, uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < ps.path_count(); ++i) {
        auto len = static_cast<uint32_t>(ps.path(i).size());
        if (len >= lo && len <= hi) out.push_back(i);
    }
    return out;
}

std::vector<uint32_t> select_typical_paths(const PathSystem& ps, double omega) {
    double w3 = omega * omega * omega;
    return select_typical_paths(ps, static_cast<uint32_t>(std::ceil(w3)),
                                static_cast<uint32_t>(std::floor(3.0 * w3)));
}

EndpointWindows make_windows(const PathSystem& ps, const std::vector<uint32_t>& typical,
                             uint32_t window) {
    EndpointWindows out;
    out.window = window;
    out.typical = typical;
    for (uint32_t k = 0; k < typical.size(); ++k) {
        const auto& p = ps.path(typical[k]);
        if (p.size() < 2ULL * window)
            throw std::invalid_argument("endpoint windows must be disjoint within a path");
        for (uint32_t i = 0; i < window; ++i) {
            out.head_of[p[i]] = k;
            out.tail_of[p[p.size() - 1 - i]] = k;
        }
    }
    return out;
}

bool is_valid_digraph_cycle(const MergeDigraph& h, const std::vector<uint32_t>& seq) {
    if (seq.size() < 3) return false;
    std::unordered_set<uint32_t> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) return false;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= h.out.size()) return false;
        if (!h.has_arc(seq[i], seq[(i + 1) % seq.size()])) return false;
    }
    return true;
}

namespace {

constexpr uint32_t kNoMatch = UINT32_MAX;

// Hopcroft-Karp between out-copies (left) and in-copies (right).
std::vector<uint32_t> max_out_in_matching(const MergeDigraph& h) {
    const uint32_t m = static_cast<uint32_t>(h.out.size());
    std::vector<uint32_t> match_l(m, kNoMatch), match_r(m, kNoMatch), dist(m);
    const uint32_t kInf = UINT32_MAX;

    auto bfs = [&]() {
        std::vector<uint32_t> q;
        for (uint32_t u = 0; u < m; ++u) {
            dist[u] = match_l[u] == kNoMatch ? 0 : kInf;
            if (dist[u] == 0) q.push_back(u);
        }
        bool found = false;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            uint32_t u = q[qi];
            for (const auto& arc : h.out[u]) {
                uint32_t w = match_r[arc.to];
                if (w == kNoMatch) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        return found;
    };
    std::function<bool(uint32_t)> dfs = [&](uint32_t u) {
        for (const auto& arc : h.out[u]) {
            uint32_t w = match_r[arc.to];
            if (w == kNoMatch || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = arc.to;
                match_r[arc.to] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs())
        for (uint32_t u = 0; u < m; ++u)
            if (match_l[u] == kNoMatch) dfs(u);
    return match_l;
}

// Pure cycles of the successor map (path components discarded).
std::vector<std::vector<uint32_t>> cover_cycles(const std::vector<uint32_t>& succ) {
    const uint32_t m = static_cast<uint32_t>(succ.size());
    std::vector<uint32_t> pred(m, kNoMatch);
    for (uint32_t u = 0; u < m; ++u)
        if (succ[u] != kNoMatch) pred[succ[u]] = u;
    std::vector<uint8_t> on_path(m, 0);
    for (uint32_t u = 0; u < m; ++u) {
        if (pred[u] != kNoMatch || succ[u] == kNoMatch) continue;
        for (uint32_t x = u; x != kNoMatch && !on_path[x]; x = succ[x]) on_path[x] = 1;
    }
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<uint8_t> seen(m, 0);
    for (uint32_t u = 0; u < m; ++u) {
        if (seen[u] || on_path[u] || succ[u] == kNoMatch) continue;
        std::vector<uint32_t> cyc;
        uint32_t x = u;
        do {
            cyc.push_back(x);
            seen[x] = 1;
            x = succ[x];
        } while (x != u && x != kNoMatch && !seen[x]);
        if (x == u) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

// Swap one arc of each cycle for two cross arcs when both exist.
bool try_patch(const MergeDigraph& h, const std::unordered_set<uint64_t>& arcs,
               std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
               std::vector<uint32_t>& merged) {
    std::unordered_map<uint32_t, uint32_t> pos_b;
    for (uint32_t i = 0; i < b.size(); ++i) pos_b[b[i]] = i;
    auto key = [](uint32_t i, uint32_t j) { return (static_cast<uint64_t>(i) << 32) | j; };
    for (uint32_t xi = 0; xi < a.size(); ++xi) {
        uint32_t x = a[xi], y = a[(xi + 1) % a.size()];
        for (const auto& arc : h.out[x]) {
            auto it = pos_b.find(arc.to);
            if (it == pos_b.end()) continue;
            uint32_t zi = it->second;
            uint32_t xp = b[(zi + b.size() - 1) % b.size()];
            if (!arcs.count(key(xp, y))) continue;
            merged.clear();
            for (uint32_t i = 0; i <= xi; ++i) merged.push_back(a[i]);
            for (uint32_t i = 0; i < b.size(); ++i) merged.push_back(b[(zi + i) % b.size()]);
            for (uint32_t i = xi + 1; i < a.size(); ++i) merged.push_back(a[i]);
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> greedy_dfs_cycle(const MergeDigraph& h) {
    const uint32_t m = static_cast<uint32_t>(h.out.size());
    std::vector<uint32_t> order(m);
    for (uint32_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return h.out[a].size() != h.out[b].size() ? h.out[a].size() > h.out[b].size() : a < b;
    });

    std::vector<uint32_t> best;
    std::vector<uint8_t> visited(m, 0);
    uint32_t starts = std::min<uint32_t>(m, 24);
    for (uint32_t si = 0; si < starts; ++si) {
        uint32_t start = order[si];
        std::fill(visited.begin(), visited.end(), 0);
        std::vector<uint32_t> walk{start};
        visited[start] = 1;
        size_t best_closable = 0;
        for (;;) {
            uint32_t cur = walk.back();
            if (walk.size() >= 3 && h.has_arc(cur, start)) best_closable = walk.size();
            uint32_t next = kNoMatch;
            size_t next_deg = 0;
            for (const auto& arc : h.out[cur])
                if (!visited[arc.to]) {
                    size_t deg = h.out[arc.to].size();
                    if (next == kNoMatch || deg > next_deg ||
                        (deg == next_deg && arc.to < next)) {
                        next = arc.to;
                        next_deg = deg;
                    }
                }
            if (next == kNoMatch) break;
            visited[next] = 1;
            walk.push_back(next);
        }
        if (best_closable >= 3 && best_closable > best.size())
            best.assign(walk.begin(), walk.begin() + best_closable);
        if (best.size() == m) break;
    }
    return best;
}

}  // namespace

std::vector<uint32_t> long_cycle_in_digraph(const MergeDigraph& h, uint32_t target_len) {
    if (h.out.empty()) return {};
    auto cycles = cover_cycles(max_out_in_matching(h));

    std::unordered_set<uint64_t> arcs;
    for (uint32_t i = 0; i < h.out.size(); ++i)
        for (const auto& arc : h.out[i]) arcs.insert((static_cast<uint64_t>(i) << 32) | arc.to);

    bool merged_any = true;
    std::vector<uint32_t> merged;
    while (merged_any && cycles.size() > 1) {
        merged_any = false;
        for (size_t a = 0; a < cycles.size() && !merged_any; ++a)
            for (size_t b = a + 1; b < cycles.size() && !merged_any; ++b)
                if (try_patch(h, arcs, cycles[a], cycles[b], merged) ||
                    try_patch(h, arcs, cycles[b], cycles[a], merged)) {
                    cycles[a] = merged;
                    cycles.erase(cycles.begin() + b);
                    merged_any = true;
                }
    }

    std::vector<uint32_t> best;
    for (auto& c : cycles)
        if (c.size() >= 3 && c.size() > best.size()) best = std::move(c);

    if (best.size() < std::max<uint32_t>(3, target_len)) {
        auto fallback = greedy_dfs_cycle(h);
        if (fallback.size() > best.size()) best = fallback;
    }
    if (!best.empty() && !is_valid_digraph_cycle(h, best))
        throw std::logic_error("long_cycle_in_digraph produced an invalid cycle");
    return best;
}

SkeletonCycle assemble_graph_cycle(const std::vector<uint32_t>& cycle, const MergeDigraph& h,
                                   const EndpointWindows& w, const PathSystem& ps,
                                   const AcceptedGraph& g) {
    if (cycle.size() < 2) throw std::invalid_argument("assemble_graph_cycle: cycle too short");

    const size_t s = cycle.size();
    auto arc_edge = [&](uint32_t from, uint32_t to) -> Edge {
        for (const auto& arc : h.out[from])
            if (arc.to == to) return arc.realizing;
        throw std::logic_error("assemble_graph_cycle: missing digraph arc");
    };
    // head-window endpoint of the realizing edge belongs to the source path,
    // tail-window endpoint to the target path
    auto split_ends = [&](Edge e, uint32_t from, uint32_t to) -> std::pair<VertexId, VertexId> {
        auto hu = w.head_of.find(e.u);
        if (hu != w.head_of.end() && hu->second == from) {
            auto tv = w.tail_of.find(e.v);
            if (tv != w.tail_of.end() && tv->second == to) return {e.u, e.v};
        }
        auto hv = w.head_of.find(e.v);
        if (hv != w.head_of.end() && hv->second == from) {
            auto tu = w.tail_of.find(e.u);
            if (tu != w.tail_of.end() && tu->second == to) return {e.v, e.u};
        }
        throw std::logic_error("assemble_graph_cycle: realizing edge outside its windows");
    };

    // exit[j]: head-window vertex where path cycle[j] connects onward;
    // entry[j]: tail-window vertex where it is entered.
    std::vector<VertexId> exit(s), entry(s);
    for (size_t j = 0; j < s; ++j) {
        uint32_t from = cycle[j], to = cycle[(j + 1) % s];
        auto [u, v] = split_ends(arc_edge(from, to), from, to);
        exit[j] = u;
        entry[(j + 1) % s] = v;
    }

    SkeletonCycle sc;
    sc.on_cycle.assign(g.n(), 0);
    sc.pos.assign(g.n(), UINT32_MAX);
    for (size_t j = 0; j < s; ++j) {
        const auto& path = ps.path(w.typical[cycle[j]]);
        size_t pe = 0, px = 0;
        for (size_t i = 0; i < path.size(); ++i) {
            if (path[i] == entry[j]) pe = i;
            if (path[i] == exit[j]) px = i;
        }
        if (pe <= px) throw std::logic_error("assemble_graph_cycle: window order violated");
        for (size_t i = pe + 1; i-- > px;) sc.sequence.push_back(path[i]);
    }
    for (uint32_t i = 0; i < sc.sequence.size(); ++i) {
        VertexId v = sc.sequence[i];
        VertexId nxt = sc.sequence[(i + 1) % sc.sequence.size()];
        if (!g.has_edge(v, nxt))
            throw std::logic_error("assemble_graph_cycle: consecutive vertices not adjacent");
        if (sc.on_cycle[v]) throw std::logic_error("assemble_graph_cycle: repeated vertex");
        sc.on_cycle[v] = 1;
        sc.pos[v] = i;
    }
    return sc;
}

CompletionPaths compute_completion_paths(const SkeletonCycle& sc,
                                         const std::vector<uint32_t>& deg_in_chat) {
    CompletionPaths out;
    const uint32_t len = static_cast<uint32_t>(sc.sequence.size());
    out.run_of.assign(len, UINT32_MAX);

    uint32_t anchor = UINT32_MAX;
    for (uint32_t i = 0; i < len; ++i)
        if (deg_in_chat[i] >= 3) {
            anchor = i;
            break;
        }
    if (anchor == UINT32_MAX) return out;  // no delimiter anywhere
    out.valid = true;

    for (uint32_t off = 0; off < len;) {
        uint32_t i = (anchor + off) % len;
        if (deg_in_chat[i] != 2) {
            ++off;
            continue;
        }
        uint32_t start = off;
        while (off < len && deg_in_chat[(anchor + off) % len] == 2) ++off;
        uint32_t run_id = static_cast<uint32_t>(out.runs.size());
        // bounding degree-3 vertices included
        out.runs.emplace_back((anchor + start - 1) % len, (anchor + off) % len);
        for (uint32_t k = start; k < off; ++k) out.run_of[(anchor + k) % len] = run_id;
    }
    return out;
}

LowDStrategy::LowDStrategy(const PhasePlan& plan, const AcceptedGraph& graph,
                           const BudgetLedger& ledger)
    : plan_(plan), graph_(graph), ledger_(ledger), paths_(plan.n, plan.path_count) {
    stage_end_ = plan_.path_cap;
    stages_.push_back({"paths", 0, 0});
}

StageStat& LowDStrategy::stat(const char* name) {
    if (stages_.empty() || stages_.back().name != name) stages_.push_back({name, 0, 0});
    return stages_.back();
}

void LowDStrategy::halt(uint64_t, const std::string& reason) {
    failed_stage_ = reason;
    stage_ = Stage::Halted;
    stage_end_ = plan_.t;
}

void LowDStrategy::start_merge(uint64_t round) {
    auto typical = select_typical_paths(paths_, plan_.typical_lo, plan_.typical_hi);
    typical_count_ = typical.size();
    if (typical.size() < 3) {
        halt(round, "stage2-too-few-typical");
        return;
    }
    windows_ = make_windows(paths_, typical, plan_.window);
    digraph_.out.assign(typical.size(), {});
    stage_ = Stage::Merge;
    stage_end_ = (round - 1) + plan_.merge_len;
}

void LowDStrategy::start_post_merge(uint64_t round) {
    auto m = static_cast<uint32_t>(windows_.typical.size());
    auto target = static_cast<uint32_t>(std::ceil((1.0 - 1.0 / plan_.omega) * m));
    cycle_ = long_cycle_in_digraph(digraph_, target);
    if (cycle_.size() < 3) {
        halt(round, "stage2-no-cycle");
        return;
    }
    skeleton_ = assemble_graph_cycle(cycle_, digraph_, windows_, paths_, graph_);

    if (plan_.d == 2) {
        // every off-cycle vertex needs two distinct cycle neighbors
        for (VertexId v = 0; v < graph_.n(); ++v)
            if (!skeleton_.on_cycle[v]) need_[v] = 2;
        needs_ready_ = true;
        stage_ = Stage::Finish;
        stage_end_ = plan_.t;
        return;
    }

    // d == 3: split the cycle into three arcs of near-equal size and pick the
    // lexicographically-first off-cycle vertices as the fourth class.
    arc_of_.assign(graph_.n(), 0);
    const auto len = static_cast<uint32_t>(skeleton_.sequence.size());
    uint32_t base = len / 3, rem = len % 3, idx = 0, largest = 0;
    for (uint32_t a = 0; a < 3; ++a) {
        uint32_t size = base + (a < rem ? 1 : 0);
        largest = std::max(largest, size);
        for (uint32_t k = 0; k < size; ++k) arc_of_[skeleton_.sequence[idx++]] = a + 1;
    }
    uint32_t picked = 0;
    for (VertexId v = 0; v < graph_.n() && picked < largest; ++v)
        if (!skeleton_.on_cycle[v]) {
            arc_of_[v] = 4;
            ++picked;
        }
    tri_matched_.assign(graph_.n(), 0);
    stage_ = Stage::Tri1;
    stage_end_ = (round - 1) + plan_.tri_len;
}

void LowDStrategy::start_completion(uint64_t round) {
    // chat = cycle plus the off-cycle vertices that gained three cycle
    // neighbors in the arc matchings
    in_chat_ = skeleton_.on_cycle;
    bool any_s = false;
    for (VertexId v = 0; v < graph_.n(); ++v) {
        if (skeleton_.on_cycle[v]) continue;
        uint32_t to_cycle = 0;
        for (VertexId w : graph_.neighbors(v)) to_cycle += skeleton_.on_cycle[w];
        if (to_cycle >= 3) {
            in_chat_[v] = 1;
            any_s = true;
        }
    }
    chat_nonempty_ = any_s;

    deg_chat_.assign(graph_.n(), 0);
    for (VertexId v = 0; v < graph_.n(); ++v) {
        if (!in_chat_[v]) continue;
        uint32_t deg = 0;
        for (VertexId w : graph_.neighbors(v)) deg += in_chat_[w];
        deg_chat_[v] = deg;
    }

    const auto len = static_cast<uint32_t>(skeleton_.sequence.size());
    std::vector<uint32_t> deg_at_pos(len);
    for (uint32_t i = 0; i < len; ++i) deg_at_pos[i] = deg_chat_[skeleton_.sequence[i]];
    completion_ = compute_completion_paths(skeleton_, deg_at_pos);

    if (!any_s || !completion_.valid) {
        halt(round, "stage3-chat-empty");
        return;
    }

    for (uint32_t i = 0; i < len; ++i)
        if (deg_at_pos[i] == 2) {
            need_[skeleton_.sequence[i]] = 1;
            ++deg2_in_chat_;
        }
    for (VertexId v = 0; v < graph_.n(); ++v) {
        if (in_chat_[v]) continue;
        uint32_t have = 0;
        for (VertexId w : graph_.neighbors(v)) have += in_chat_[w];
        if (have < 3) need_[v] = 3 - have;
    }
    needs_ready_ = true;
    stage_ = Stage::Finish;
    stage_end_ = plan_.t;
}

void LowDStrategy::advance(uint64_t round) {
    while (stage_ != Stage::Finish && stage_ != Stage::Halted && round > stage_end_) {
        switch (stage_) {
            case Stage::Paths:
                start_merge(round);
                break;
            case Stage::Merge:
                start_post_merge(round);
                break;
            case Stage::Tri1:
                stage_ = Stage::Tri2;
                stage_end_ += plan_.tri_len;
                break;
            case Stage::Tri2:
                stage_ = Stage::Tri3;
                stage_end_ += plan_.tri_len;
                break;
            case Stage::Tri3:
                start_completion(round);
                break;
            default:
                return;
        }
    }
}

Decision LowDStrategy::decide(uint64_t round, Edge e) {
    advance(round);
    switch (stage_) {
        case Stage::Paths: {
            stat("paths").rounds++;
            if (paths_.covered() >= plan_.coverage_target) return Decision::Reject;
            if (!ledger_.can_accept()) return Decision::Reject;
            return paths_.consider(e);
        }
        case Stage::Merge: {
            stat("merge").rounds++;
            if (!ledger_.can_accept()) return Decision::Reject;
            auto hu = windows_.head_of.find(e.u);
            auto tv = windows_.tail_of.find(e.v);
            if (hu != windows_.head_of.end() && tv != windows_.tail_of.end() &&
                hu->second != tv->second)
                return Decision::Accept;
            auto hv = windows_.head_of.find(e.v);
            auto tu = windows_.tail_of.find(e.u);
            if (hv != windows_.head_of.end() && tu != windows_.tail_of.end() &&
                hv->second != tu->second)
                return Decision::Accept;
            return Decision::Reject;
        }
        case Stage::Tri1:
        case Stage::Tri2:
        case Stage::Tri3: {
            uint32_t p = stage_ == Stage::Tri1 ? 1 : stage_ == Stage::Tri2 ? 2 : 3;
            stat(p == 1 ? "tri1" : p == 2 ? "tri2" : "tri3").rounds++;
            if (!ledger_.can_accept()) return Decision::Reject;
            uint8_t au = arc_of_[e.u], av = arc_of_[e.v];
            bool pairs = (au == p && av == 4) || (av == p && au == 4);
            if (!pairs) return Decision::Reject;
            uint8_t bit = static_cast<uint8_t>(1u << p);
            if ((tri_matched_[e.u] & bit) || (tri_matched_[e.v] & bit)) return Decision::Reject;
            return Decision::Accept;
        }
        case Stage::Finish: {
            stat(plan_.d == 2 ? "attach" : "complete").rounds++;
            if (!ledger_.can_accept() || !needs_ready_) return Decision::Reject;
            return (finish_serves(e.u, e.v) || finish_serves(e.v, e.u)) ? Decision::Accept
                                                                        : Decision::Reject;
        }
        case Stage::Halted:
            stat("halted").rounds++;
            return Decision::Reject;
    }
    return Decision::Reject;
}

bool LowDStrategy::finish_serves(VertexId w, VertexId other) const {
    auto it = need_.find(w);
    if (it == need_.end() || it->second == 0) return false;
    if (w == other || graph_.has_edge(w, other)) return false;
    if (plan_.d == 2) return skeleton_.on_cycle[other] != 0;
    if (!in_chat_[other]) return false;
    if (skeleton_.on_cycle[w]) {
        // completion edge for a degree-2 cycle vertex must leave its P-path
        uint32_t run = completion_.run_of[skeleton_.pos[w]];
        if (run != UINT32_MAX && skeleton_.on_cycle[other]) {
            auto [lo, hi] = completion_.runs[run];
            uint32_t len = static_cast<uint32_t>(skeleton_.sequence.size());
            uint32_t span = (hi + len - lo) % len;  // inclusive interval length - 1
            uint32_t off = (skeleton_.pos[other] + len - lo) % len;
            if (off <= span) return false;
        }
    }
    return true;
}

void LowDStrategy::on_accepted(uint64_t round, Edge e) {
    switch (stage_) {
        case Stage::Paths: {
            stat("paths").accepts++;
            paths_.apply(e);
            if (paths_.covered() >= plan_.coverage_target) stage_end_ = round;
            break;
        }
        case Stage::Merge: {
            stat("merge").accepts++;
            auto hu = windows_.head_of.find(e.u);
            auto tv = windows_.tail_of.find(e.v);
            uint32_t from, to;
            VertexId head_v, tail_v;
            if (hu != windows_.head_of.end() && tv != windows_.tail_of.end() &&
                hu->second != tv->second) {
                from = hu->second, to = tv->second, head_v = e.u, tail_v = e.v;
            } else {
                from = windows_.head_of.at(e.v), to = windows_.tail_of.at(e.u);
                head_v = e.v, tail_v = e.u;
            }
            record_arc(from, to, head_v, tail_v, e);
            break;
        }
        case Stage::Tri1:
        case Stage::Tri2:
        case Stage::Tri3: {
            uint32_t p = stage_ == Stage::Tri1 ? 1 : stage_ == Stage::Tri2 ? 2 : 3;
            stat(p == 1 ? "tri1" : p == 2 ? "tri2" : "tri3").accepts++;
            uint8_t bit = static_cast<uint8_t>(1u << p);
            tri_matched_[e.u] |= bit;
            tri_matched_[e.v] |= bit;
            break;
        }
        case Stage::Finish: {
            stat(plan_.d == 2 ? "attach" : "complete").accepts++;
            // the edge is new, so each qualifying endpoint gained a neighbor
            auto serve = [&](VertexId w, VertexId other) {
                auto it = need_.find(w);
                if (it == need_.end() || it->second == 0) return;
                bool ok = plan_.d == 2 ? skeleton_.on_cycle[other] != 0 : in_chat_[other] != 0;
                if (!ok) return;
                if (plan_.d == 3 && skeleton_.on_cycle[w]) {
                    uint32_t run = completion_.run_of[skeleton_.pos[w]];
                    if (run != UINT32_MAX && skeleton_.on_cycle[other]) {
                        auto [lo, hi] = completion_.runs[run];
                        uint32_t len = static_cast<uint32_t>(skeleton_.sequence.size());
                        uint32_t span = (hi + len - lo) % len;
                        uint32_t off = (skeleton_.pos[other] + len - lo) % len;
                        if (off <= span) return;
                    }
                }
                --it->second;
            };
            serve(e.u, e.v);
            serve(e.v, e.u);
            break;
        }
        case Stage::Halted:
            break;
    }
}

void LowDStrategy::record_arc(uint32_t from, uint32_t to, VertexId head_v, VertexId tail_v,
                              Edge e) {
    // prefer the realizing edge that trims the fewest path vertices
    const auto& from_path = paths_.path(windows_.typical[from]);
    const auto& to_path = paths_.path(windows_.typical[to]);
    auto pos_in = [](const std::vector<VertexId>& p, VertexId v) {
        for (uint32_t i = 0; i < p.size(); ++i)
            if (p[i] == v) return i;
        return UINT32_MAX;
    };
    uint32_t waste_new =
        pos_in(from_path, head_v) +
        (static_cast<uint32_t>(to_path.size()) - 1 - pos_in(to_path, tail_v));
    for (auto& arc : digraph_.out[from])
        if (arc.to == to) {
            auto old = arc.realizing;
            VertexId old_head = windows_.head_of.count(old.u) &&
                                        windows_.head_of.at(old.u) == from
                                    ? old.u
                                    : old.v;
            VertexId old_tail = old_head == old.u ? old.v : old.u;
            uint32_t waste_old =
                pos_in(from_path, old_head) +
                (static_cast<uint32_t>(to_path.size()) - 1 - pos_in(to_path, old_tail));
            if (waste_new < waste_old) arc.realizing = e;
            return;
        }
    digraph_.out[from].push_back({to, e});
}

void LowDStrategy::finalize(TrialReport& report) {
    // a run that ended exactly at a stage boundary still owes its transition
    advance(plan_.t + 1);
    report.stages = stages_;
    report.failed_stage = failed_stage_;
    report.paths_built = paths_.path_count();
    report.typical_count = typical_count_;
    report.digraph_edge_count = digraph_.arc_count();
    report.cycle_length = skeleton_.sequence.size();
    report.cycle_coverage =
        typical_count_ ? static_cast<double>(cycle_.size()) / static_cast<double>(typical_count_)
                       : 0.0;
    report.deg2_in_chat = deg2_in_chat_;
    report.chat_nonempty = chat_nonempty_;
    bool all_zero = needs_ready_;
    for (const auto& [v, k] : need_)
        if (k > 0) all_zero = false;
    report.needs_satisfied = all_zero;
}

}  // namespace builder
