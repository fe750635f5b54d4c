// report.hpp — per-trial record and its CSV/JSON serialization.
//
// CSV column order is a stable contract:
//   seed,n,d,mode,omega,eps,t_budget,b_budget,rounds_used,edges_accepted,
//   stage,failed_stage,k_tested,connected,check_mode,witness_size,wallclock_ms
// `stage` is a semicolon-joined name=rounds:accepts list. The JSON object
// mirrors these field names exactly.
#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace builder {

struct StageStat {
    std::string name;
    uint64_t rounds = 0;
    uint64_t accepts = 0;
};

struct TrialReport {
    // config echo
    uint64_t seed = 0;
    uint32_t n = 0;
    uint32_t d = 0;
    std::string mode = "real";
    double omega = 0.0;
    double eps = 0.0;
    uint64_t t_budget = 0;
    uint64_t b_budget = 0;

    // trajectory
    uint64_t rounds_used = 0;
    uint64_t edges_accepted = 0;
    uint64_t budget_overrides = 0;
    std::vector<StageStat> stages;
    std::string failed_stage;  // empty when no stage hard-failed

    // verdict
    uint32_t k_tested = 0;
    bool connected = false;
    std::string check_mode = "exact";  // exact | sampled
    int64_t witness_size = -1;         // -1: none recorded
    uint64_t wallclock_ms = 0;

    // diagnostics carried in-memory (not part of the CSV schema)
    bool needs_satisfied = false;
    bool gprime_min_deg_ok = true;  // d >= 4: min degree of peeled core >= d-1
    bool degenerate_peel = false;
    bool chat_nonempty = false;  // d == 3: skeleton gained degree-3 attachments
    uint64_t h_size = 0;
    uint64_t fragile_count = 0;
    uint64_t outside_count = 0;
    uint64_t paths_built = 0;
    uint64_t typical_count = 0;
    uint64_t digraph_edge_count = 0;
    uint64_t cycle_length = 0;       // vertices on the assembled skeleton cycle
    double cycle_coverage = 0.0;     // fraction of typical paths used by the cycle
    uint64_t deg2_in_chat = 0;
    uint64_t repeated_edges = 0;  // auxiliary mode diagnostic

    uint64_t stage_rounds_total() const;
    uint64_t stage_accepts_total() const;
};

std::string csv_header();
std::string to_csv_row(const TrialReport& r);
std::string to_json_object(const TrialReport& r);

// Parses one data row of the schema above (used by replay).
TrialReport parse_csv_row(const std::string& line);

}  // namespace builder
