// experiment.hpp — trial orchestration and experiment sweeps.
#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "builder/graph.hpp"
#include "builder/phase_plan.hpp"
#include "builder/report.hpp"

namespace builder {

enum class ConnMode { Exact, Sampled, Auto };

struct TrialConfig {
    uint32_t n = 1000;
    uint32_t d = 2;
    uint64_t seed = 0;
    double omega = 4.0;
    double eps = 0.3;
    bool auxiliary = false;  // d >= 4 matching-stage diagnostic mode
    double stage1_cap_factor = 0.0;
    SchedulePolicy policy = SchedulePolicy::Desk;
    ConnMode conn = ConnMode::Auto;
    uint32_t conn_threshold = 20000;  // exact up to here in Auto mode
};

struct TrialOutcome {
    TrialReport report;
    AcceptedGraph graph;
};

TrialReport run_trial(const TrialConfig& cfg);
TrialOutcome run_trial_with_graph(const TrialConfig& cfg);

struct ExperimentConfig {
    std::vector<uint32_t> ns{1000};
    std::vector<uint32_t> ds{2};
    uint32_t trials = 50;
    uint64_t base_seed = 1;
    double omega = 4.0;
    double eps = 0.3;
    bool auxiliary = false;
    double stage1_cap_factor = 0.0;
    SchedulePolicy policy = SchedulePolicy::Desk;
    ConnMode conn = ConnMode::Auto;
    uint32_t conn_threshold = 20000;
    uint32_t workers = 1;
    std::string format = "csv";  // csv | json
};

struct CellStats {
    uint32_t n = 0;
    uint32_t d = 0;
    uint32_t trials = 0;
    uint32_t successes = 0;
    uint64_t max_rounds = 0, max_edges = 0;
    double mean_rounds = 0.0, mean_edges = 0.0;
    double edges_over_dn2 = 0.0;    // mean edges / (d*n/2)
    double rounds_over_nln2 = 0.0;  // mean rounds / (n*ln n/2)
    uint64_t budget_overrides = 0;
    std::vector<std::pair<std::string, uint32_t>> failure_counts;  // by failed_stage

    double success_rate() const { return trials ? double(successes) / trials : 0.0; }
};

struct SummaryStats {
    std::vector<CellStats> cells;
};

// Runs trials in deterministic row order (cells in declared order, trial i of
// a cell seeded base_seed + i). Rows are written to `rows` (when given) in
// trial-index order regardless of worker completion order.
SummaryStats run_experiment(const ExperimentConfig& cfg, std::ostream* rows = nullptr,
                            std::vector<TrialReport>* collected = nullptr);

void print_summary(const SummaryStats& stats, std::ostream& out);

// Re-executes the trial described by one CSV data row of the standard schema
// and returns the freshly computed report. Knobs outside the schema
// (stage1 cap, connectivity threshold) take their defaults.
TrialReport replay_trial(const std::string& csv_row);

}  // namespace builder
