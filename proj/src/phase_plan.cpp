#include "builder/phase_plan.hpp"

#include <algorithm>
#include <cmath>

namespace builder {

namespace {

// Desk-policy budget shares of t per stage group. The remainder of t always
// goes to the final boost/attach/completion phase.
constexpr double kMatchShare = 0.50;    // d >= 4: all d matching phases together
constexpr double kPathShare = 0.40;     // d in {2,3}: stage 1
constexpr double kMergeShareD2 = 0.20;  // stage 2
constexpr double kMergeShareD3 = 0.15;
constexpr double kTriShare = 0.21;  // d == 3: all three arc matchings together

uint64_t ceil_u64(double x) { return static_cast<uint64_t>(std::ceil(x)); }

void validate_common(uint32_t n, uint32_t d, double omega, double eps) {
    if (n < 2) throw PlanError("phase plan: n >= 2 required");
    if (d < 2) throw PlanError("phase plan: d >= 2 required");
    if (!(omega > 1.0)) throw PlanError("phase plan: omega > 1 required");
    if (!(eps > 0.0)) throw PlanError("phase plan: eps > 0 required");
}

void check_fits(uint64_t used, uint64_t t) {
    if (used >= t)
        throw PlanError("phase plan: schedule exceeds the round budget t; "
                        "omega is incompatible with this n");
}

// Rounds stage 1 is expected to need to push path coverage from N seed
// vertices to `target`: each extension waits ~ C(n,2)/(N * outside).
double expected_path_rounds(uint32_t n, double paths, double target) {
    double outside_end = std::max(1.0, n - target);
    double span = std::log((n - paths) / outside_end);
    return n * static_cast<double>(n) * std::max(span, 0.1) / (2.0 * paths);
}

void derive_low_d_params(PhasePlan& plan, bool literal) {
    const uint32_t n = plan.n;
    const double omega = plan.omega;
    // the adaptive early stop at (1 - 1/omega) n is the desk substitute for
    // running the full literal stage-1 round count; d = 3 always stops at
    // 3n/4 - 1
    if (plan.d == 3)
        plan.coverage_target = static_cast<uint32_t>(3ULL * n / 4 - 1);
    else
        plan.coverage_target =
            literal ? n : static_cast<uint32_t>(std::ceil((1.0 - 1.0 / omega) * n));

    double n_paper = std::max(1.0, n / (2.0 * omega * omega * omega));
    double paths;
    if (literal) {
        paths = n_paper;
    } else {
        // Smallest N that fits the expected stage-1 rounds into the cap,
        // refined once since N appears on both sides.
        paths = n_paper;
        for (int iter = 0; iter < 3; ++iter) {
            double needed = expected_path_rounds(n, paths, plan.coverage_target);
            if (needed <= static_cast<double>(plan.path_cap)) break;
            double outside_end = std::max(1.0, static_cast<double>(n) - plan.coverage_target);
            double span = std::max(0.1, std::log((n - paths) / outside_end));
            paths = n * static_cast<double>(n) * span / (2.0 * plan.path_cap);
        }
        paths = std::max(paths, n_paper);
    }
    plan.path_count =
        std::clamp<uint32_t>(static_cast<uint32_t>(std::lround(paths)), 1,
                             std::max<uint32_t>(1, plan.coverage_target / 2));

    // Mean path length at the end of stage 1; the typical window is
    // [mean/2, 3*mean/2] and the endpoint window stays inside half a
    // typical path. With the asymptotic path count these reduce to
    // [omega^3, 3*omega^3] and omega^2. The literal schedule grows paths
    // until its round cap, so its length analysis is anchored at full
    // coverage rather than the early-stop target.
    double mean_basis = literal ? n : plan.coverage_target;
    double mean_len = mean_basis / plan.path_count;
    plan.typical_lo = std::max<uint32_t>(2, static_cast<uint32_t>(std::floor(mean_len / 2.0)));
    plan.typical_hi =
        std::max(plan.typical_lo, static_cast<uint32_t>(std::ceil(1.5 * mean_len)));
    uint32_t w_cap = std::max<uint32_t>(1, static_cast<uint32_t>(omega * omega));
    plan.window = std::clamp<uint32_t>(plan.typical_lo / 2, 1, w_cap);
}

}  // namespace

Budget budget_from(uint32_t n, uint32_t d, double eps) {
    Budget out;
    out.t = ceil_u64((1.0 + eps) * n * std::log(static_cast<double>(n)) / 2.0);
    out.b = ceil_u64((1.0 + eps) * d * static_cast<double>(n) / 2.0);
    return out;
}

uint64_t matching_phase_rounds_literal(uint32_t n, double omega) {
    return ceil_u64(n * std::log(static_cast<double>(n)) / omega);
}

std::vector<std::pair<std::string, uint64_t>> PhasePlan::boundaries() const {
    std::vector<std::pair<std::string, uint64_t>> out;
    uint64_t end = 0;
    for (size_t i = 0; i < phases.size(); ++i) {
        end = (i + 1 == phases.size()) ? t : end + phases[i].length;
        out.emplace_back(phases[i].name, end);
    }
    return out;
}

PhasePlan make_phase_plan(uint32_t n, uint32_t d, double omega, double eps,
                          SchedulePolicy policy, double stage1_cap_factor) {
    validate_common(n, d, omega, eps);
    const bool literal = policy == SchedulePolicy::Literal;

    PhasePlan plan;
    plan.n = n;
    plan.d = d;
    plan.omega = omega;
    plan.eps = eps;
    Budget budget = budget_from(n, d, eps);
    plan.t = budget.t;
    plan.b = budget.b;

    const double ln_n = std::log(static_cast<double>(n));

    if (d >= 4) {
        uint64_t lit = matching_phase_rounds_literal(n, omega);
        plan.matching_len =
            literal ? lit : std::min(lit, std::max<uint64_t>(1, ceil_u64(kMatchShare * plan.t / d)));
        check_fits(plan.matching_len * d, plan.t);
        for (uint32_t i = 1; i <= d; ++i)
            plan.phases.push_back({"match" + std::to_string(i), plan.matching_len});
        plan.phases.push_back({"boost", plan.t - plan.matching_len * d});
        return plan;
    }

    // d in {2, 3}
    uint64_t path_lit = ceil_u64(std::pow(omega, 5) * n);
    plan.path_cap = path_lit;
    if (stage1_cap_factor > 0.0)
        plan.path_cap = std::min(plan.path_cap, ceil_u64(stage1_cap_factor * n * ln_n));
    if (!literal)
        plan.path_cap = std::min(plan.path_cap, std::max<uint64_t>(1, ceil_u64(kPathShare * plan.t)));

    uint64_t merge_lit = ceil_u64(std::pow(omega, 3) * n);
    double merge_share = d == 2 ? kMergeShareD2 : kMergeShareD3;
    plan.merge_len =
        literal ? merge_lit : std::min(merge_lit, std::max<uint64_t>(1, ceil_u64(merge_share * plan.t)));

    derive_low_d_params(plan, literal);

    uint64_t used = plan.path_cap + plan.merge_len;
    plan.phases.push_back({"paths", plan.path_cap});
    plan.phases.push_back({"merge", plan.merge_len});
    if (d == 3) {
        uint64_t tri_lit = ceil_u64(n * ln_n / omega);
        plan.tri_len =
            literal ? tri_lit
                    : std::min(tri_lit, std::max<uint64_t>(1, ceil_u64(kTriShare * plan.t / 3.0)));
        used += 3 * plan.tri_len;
        for (int i = 1; i <= 3; ++i)
            plan.phases.push_back({"tri" + std::to_string(i), plan.tri_len});
    }
    check_fits(used, plan.t);
    plan.phases.push_back({d == 2 ? "attach" : "complete", plan.t - used});
    return plan;
}

}  // namespace builder
