// phase_plan.hpp — derives the per-run stage schedule from (n, d, omega, eps).
//
// Two policies:
//   Literal — the asymptotic schedule (omega^5*n path rounds, omega^3*n merge
//             rounds, n*ln n/omega matching rounds, ...) validated against the
//             round budget t; configurations whose phase sum exceeds t are
//             rejected. Only viable when omega powers are small next to ln n.
//   Desk    — the default. Each stage keeps the literal length when it fits
//             and is otherwise capped by a fixed share of t, and the low-d
//             path/merge parameters (path count, typical-length window,
//             endpoint window) are derived from the realized mean path length
//             instead of raw omega powers. In the asymptotic regime the
//             derived values coincide with the literal ones.
#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace builder {

struct Budget {
    uint64_t t = 0;
    uint64_t b = 0;
};

// t = ceil((1+eps) * n * ln n / 2), b = ceil((1+eps) * d * n / 2).
Budget budget_from(uint32_t n, uint32_t d, double eps);

// ceil(n * ln n / omega), one greedy-matching iteration.
uint64_t matching_phase_rounds_literal(uint32_t n, double omega);

enum class SchedulePolicy { Desk, Literal };

class PlanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PhasePlan {
    uint32_t n = 0;
    uint32_t d = 0;
    double omega = 0.0;
    double eps = 0.0;
    uint64_t t = 0;
    uint64_t b = 0;

    struct Phase {
        std::string name;
        uint64_t length;  // nominal rounds; the final phase absorbs slack up to t
    };
    std::vector<Phase> phases;

    // d >= 4
    uint64_t matching_len = 0;

    // d in {2, 3}
    uint64_t path_cap = 0;         // stage-1 round ceiling (adaptive stop may end earlier)
    uint32_t path_count = 0;       // N
    uint32_t coverage_target = 0;  // stage-1 stop: vertices covered by the paths
    uint32_t typical_lo = 0;       // typical path length window, in vertices
    uint32_t typical_hi = 0;
    uint32_t window = 0;           // endpoint window size w
    uint64_t merge_len = 0;
    uint64_t tri_len = 0;  // d == 3: each of the three arc matchings

    // Cumulative (name, end_round) pairs; strictly increasing, last == t.
    std::vector<std::pair<std::string, uint64_t>> boundaries() const;
};

PhasePlan make_phase_plan(uint32_t n, uint32_t d, double omega, double eps,
                          SchedulePolicy policy = SchedulePolicy::Desk,
                          double stage1_cap_factor = 0.0);

}  // namespace builder
