#include "builder/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <thread>

#include "builder/connectivity.hpp"
#include "builder/runner.hpp"
#include "builder/strategy_high_d.hpp"
#include "builder/strategy_low_d.hpp"

namespace builder {

namespace {

void check_connectivity(const TrialConfig& cfg, const AcceptedGraph& g, TrialReport& r) {
    bool exact = cfg.conn == ConnMode::Exact ||
                 (cfg.conn == ConnMode::Auto && g.n() <= cfg.conn_threshold);
    ConnectivityVerdict verdict = exact
                                      ? is_d_connected(g, cfg.d)
                                      : sampled_connectivity_check(g, cfg.d, 10 * cfg.d, cfg.seed);
    r.k_tested = cfg.d;
    r.connected = verdict.holds;
    r.check_mode = exact ? "exact" : "sampled";
    r.witness_size = verdict.witness ? static_cast<int64_t>(verdict.witness->size()) : -1;
}

}  // namespace

TrialOutcome run_trial_with_graph(const TrialConfig& cfg) {
    if (cfg.auxiliary && cfg.d < 4)
        throw std::invalid_argument("auxiliary mode is a d >= 4 matching diagnostic");

    auto started = std::chrono::steady_clock::now();
    PhasePlan plan =
        make_phase_plan(cfg.n, cfg.d, cfg.omega, cfg.eps, cfg.policy, cfg.stage1_cap_factor);

    StreamMode mode = cfg.auxiliary
                          ? StreamMode::auxiliary(cfg.d, plan.matching_len)
                          : StreamMode::real();
    ProposalStream stream(cfg.n, cfg.seed, mode);
    BudgetLedger ledger{plan.t, plan.b, 0, 0, 0};

    AcceptedGraph graph(cfg.n);
    TrialReport report;
    if (cfg.d >= 4) {
        HighDStrategy strategy(plan, graph, ledger);
        report = run_builder(stream, strategy, ledger, graph);
    } else {
        LowDStrategy strategy(plan, graph, ledger);
        report = run_builder(stream, strategy, ledger, graph);
    }

    report.seed = cfg.seed;
    report.n = cfg.n;
    report.d = cfg.d;
    report.mode = cfg.auxiliary ? "aux" : "real";
    report.omega = cfg.omega;
    report.eps = cfg.eps;
    report.t_budget = plan.t;
    report.b_budget = plan.b;
    check_connectivity(cfg, graph, report);
    report.wallclock_ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              started)
            .count());
    return {std::move(report), std::move(graph)};
}

TrialReport run_trial(const TrialConfig& cfg) { return run_trial_with_graph(cfg).report; }

SummaryStats run_experiment(const ExperimentConfig& cfg, std::ostream* rows,
                            std::vector<TrialReport>* collected) {
    struct Slot {
        TrialConfig trial;
        TrialReport report;
    };
    std::vector<Slot> slots;
    for (uint32_t n : cfg.ns)
        for (uint32_t d : cfg.ds)
            for (uint32_t i = 0; i < cfg.trials; ++i) {
                TrialConfig t;
                t.n = n;
                t.d = d;
                t.seed = cfg.base_seed + i;
                t.omega = cfg.omega;
                t.eps = cfg.eps;
                t.auxiliary = cfg.auxiliary;
                t.stage1_cap_factor = cfg.stage1_cap_factor;
                t.policy = cfg.policy;
                t.conn = cfg.conn;
                t.conn_threshold = cfg.conn_threshold;
                slots.push_back({t, {}});
            }

    uint32_t workers = std::max<uint32_t>(1, cfg.workers);
    if (workers == 1) {
        for (auto& s : slots) s.report = run_trial(s.trial);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= slots.size()) return;
                slots[i].report = run_trial(slots[i].trial);
            }
        };
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // rows in trial-index order, independent of completion order
    if (rows) {
        if (cfg.format == "json") {
            *rows << "[\n";
            for (size_t i = 0; i < slots.size(); ++i)
                *rows << "  " << to_json_object(slots[i].report)
                      << (i + 1 < slots.size() ? ",\n" : "\n");
            *rows << "]\n";
        } else {
            *rows << csv_header() << '\n';
            for (const auto& s : slots) *rows << to_csv_row(s.report) << '\n';
        }
    }
    if (collected)
        for (const auto& s : slots) collected->push_back(s.report);

    SummaryStats stats;
    for (uint32_t n : cfg.ns)
        for (uint32_t d : cfg.ds) {
            CellStats cell;
            cell.n = n;
            cell.d = d;
            std::map<std::string, uint32_t> failures;
            double sum_rounds = 0, sum_edges = 0;
            for (const auto& s : slots) {
                if (s.trial.n != n || s.trial.d != d) continue;
                const auto& r = s.report;
                ++cell.trials;
                cell.successes += r.connected ? 1 : 0;
                cell.max_rounds = std::max(cell.max_rounds, r.rounds_used);
                cell.max_edges = std::max(cell.max_edges, r.edges_accepted);
                sum_rounds += static_cast<double>(r.rounds_used);
                sum_edges += static_cast<double>(r.edges_accepted);
                cell.budget_overrides += r.budget_overrides;
                std::string tag = r.failed_stage.empty()
                                      ? (r.connected ? "" : "not-connected")
                                      : r.failed_stage;
                if (!tag.empty()) ++failures[tag];
            }
            if (cell.trials) {
                cell.mean_rounds = sum_rounds / cell.trials;
                cell.mean_edges = sum_edges / cell.trials;
                cell.edges_over_dn2 = cell.mean_edges / (0.5 * d * n);
                cell.rounds_over_nln2 =
                    cell.mean_rounds / (0.5 * n * std::log(static_cast<double>(n)));
            }
            for (auto& [k, v] : failures) cell.failure_counts.emplace_back(k, v);
            stats.cells.push_back(std::move(cell));
        }
    return stats;
}

void print_summary(const SummaryStats& stats, std::ostream& out) {
    out << "   n     d  trials  success  mean_rounds  mean_edges  edges/(dn/2)  rounds/(nlnn/2)\n";
    for (const auto& c : stats.cells) {
        out << std::setw(6) << c.n << std::setw(6) << c.d << std::setw(8) << c.trials
            << std::setw(9) << std::fixed << std::setprecision(2) << c.success_rate()
            << std::setw(13) << std::setprecision(1) << c.mean_rounds << std::setw(12)
            << c.mean_edges << std::setw(14) << std::setprecision(3) << c.edges_over_dn2
            << std::setw(17) << c.rounds_over_nln2 << '\n';
        if (!c.failure_counts.empty()) {
            out << "        failures:";
            for (const auto& [k, v] : c.failure_counts) out << ' ' << k << '=' << v;
            out << '\n';
        }
    }
    out.unsetf(std::ios::fixed);
}

TrialReport replay_trial(const std::string& csv_row) {
    TrialReport original = parse_csv_row(csv_row);
    TrialConfig cfg;
    cfg.n = original.n;
    cfg.d = original.d;
    cfg.seed = original.seed;
    cfg.omega = original.omega;
    cfg.eps = original.eps;
    cfg.auxiliary = original.mode == "aux";
    cfg.conn = original.check_mode == "sampled" ? ConnMode::Sampled : ConnMode::Exact;
    return run_trial(cfg);
}

}  // namespace builder
