#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "builder/phase_plan.hpp"
#include "builder/report.hpp"
#include "builder/runner.hpp"

using namespace builder;

TEST_CASE("budget arithmetic at n=1000, d=4, eps=0.3") {
    auto b = budget_from(1000, 4, 0.3);
    CHECK(b.t == 4491);  // ceil(1.3 * 1000 * ln 1000 / 2)
    CHECK(b.b == 2600);  // ceil(1.3 * 4 * 1000 / 2)
}

TEST_CASE("literal matching-iteration length at n=1000, omega=4") {
    CHECK(matching_phase_rounds_literal(1000, 4.0) == 1727);  // ceil(1000 * ln 1000 / 4)
}

TEST_CASE("literal schedule rejects configurations that cannot fit the budget") {
    // omega^5 * n path rounds dwarf t = ceil(1.3 n ln n / 2) at these scales
    CHECK_THROWS_AS(make_phase_plan(10000, 2, 3.0, 0.3, SchedulePolicy::Literal), PlanError);
    CHECK_THROWS_AS(make_phase_plan(1000000, 2, 2.0, 0.3, SchedulePolicy::Literal), PlanError);
    // d matching phases of n ln n / omega rounds exceed t at omega = 4
    CHECK_THROWS_AS(make_phase_plan(1000, 4, 4.0, 0.3, SchedulePolicy::Literal), PlanError);
}

TEST_CASE("plan validation rejects bad parameters") {
    CHECK_THROWS_AS(make_phase_plan(1000, 1, 4.0, 0.3), PlanError);
    CHECK_THROWS_AS(make_phase_plan(1000, 2, 1.0, 0.3), PlanError);
    CHECK_THROWS_AS(make_phase_plan(1000, 2, 4.0, 0.0), PlanError);
    CHECK_THROWS_AS(make_phase_plan(1, 2, 4.0, 0.3), PlanError);
}

TEST_CASE("desk plans always fit: boundaries strictly increase and end at t") {
    for (uint32_t n : {200u, 500u, 1000u, 2000u, 100000u})
        for (uint32_t d : {2u, 3u, 4u, 5u})
            for (double eps : {0.3, 1.0, 4.0}) {
                auto plan = make_phase_plan(n, d, 4.0, eps);
                auto bounds = plan.boundaries();
                REQUIRE(!bounds.empty());
                uint64_t prev = 0;
                for (auto& [name, end] : bounds) {
                    CHECK(end > prev);
                    prev = end;
                }
                CHECK(bounds.back().second == plan.t);
            }
}

TEST_CASE("desk plan reduces to the literal schedule when it fits") {
    // generous eps makes t large enough for the literal matching length
    auto plan = make_phase_plan(2000, 4, 8.0, 6.0);
    CHECK(plan.matching_len == matching_phase_rounds_literal(2000, 8.0));
}

TEST_CASE("high-d plan shape: d matching phases then boost") {
    auto plan = make_phase_plan(1000, 4, 4.0, 0.3);
    REQUIRE(plan.phases.size() == 5);
    for (int i = 0; i < 4; ++i) CHECK(plan.phases[i].length == plan.matching_len);
    CHECK(plan.phases[4].name == "boost");
}

TEST_CASE("low-d plan shape and derived merge parameters") {
    auto plan2 = make_phase_plan(2000, 2, 4.0, 0.3);
    REQUIRE(plan2.phases.size() == 3);
    CHECK(plan2.phases[0].name == "paths");
    CHECK(plan2.phases[2].name == "attach");
    CHECK(plan2.coverage_target == 1500);  // (1 - 1/4) n
    CHECK(plan2.path_count >= 1);
    CHECK(plan2.typical_lo >= 2);
    CHECK(plan2.typical_hi >= plan2.typical_lo);
    CHECK(plan2.window >= 1);
    CHECK(2 * plan2.window <= plan2.typical_lo + 1);

    auto plan3 = make_phase_plan(2000, 3, 4.0, 0.3);
    REQUIRE(plan3.phases.size() == 6);
    CHECK(plan3.phases[5].name == "complete");
    CHECK(plan3.coverage_target == 1499);  // 3n/4 - 1
}

TEST_CASE("derived low-d parameters recover the omega powers in the asymptotic regime") {
    // large eps so the literal schedule fits; path count then stays at
    // n / (2 omega^3) and the windows at [omega^3, 3 omega^3] with omega^2 ends
    auto plan = make_phase_plan(100000, 2, 2.0, 30.0, SchedulePolicy::Literal);
    CHECK(plan.path_count == 6250);  // 1e5 / 16
    CHECK(plan.typical_lo == 8);
    CHECK(plan.typical_hi == 24);
    CHECK(plan.window == 4);
}

TEST_CASE("accept-everything strategy is clamped at b and overrides are logged") {
    ProposalStream stream(4, 5);
    AcceptAll strategy;
    BudgetLedger ledger{6, 3, 0, 0, 0};
    auto result = run_builder(stream, strategy, ledger);
    CHECK(result.report.rounds_used == 6);
    CHECK(result.report.edges_accepted == 3);
    CHECK(result.report.budget_overrides == 3);
    CHECK(result.graph.edge_count() == 3);
}

TEST_CASE("reject-everything strategy burns all rounds and accepts nothing") {
    ProposalStream stream(4, 5);
    RejectAll strategy;
    BudgetLedger ledger{6, 3, 0, 0, 0};
    auto result = run_builder(stream, strategy, ledger);
    CHECK(result.report.rounds_used == 6);
    CHECK(result.report.edges_accepted == 0);
    CHECK(result.graph.edge_count() == 0);
}

TEST_CASE("runner stops at stream exhaustion when t exceeds it") {
    ProposalStream stream(3, 5);
    RejectAll strategy;
    BudgetLedger ledger{100, 5, 0, 0, 0};
    auto result = run_builder(stream, strategy, ledger);
    CHECK(result.report.rounds_used == 3);
}

TEST_CASE("csv row round-trips through the parser") {
    TrialReport r;
    r.seed = 42;
    r.n = 500;
    r.d = 3;
    r.mode = "real";
    r.omega = 4;
    r.eps = 0.3;
    r.t_budget = 2021;
    r.b_budget = 975;
    r.rounds_used = 2021;
    r.edges_accepted = 600;
    r.stages = {{"paths", 800, 350}, {"merge", 400, 30}};
    r.failed_stage = "";
    r.k_tested = 3;
    r.connected = true;
    r.check_mode = "exact";
    r.witness_size = -1;
    r.wallclock_ms = 17;
    auto parsed = parse_csv_row(to_csv_row(r));
    CHECK(parsed.seed == r.seed);
    CHECK(parsed.n == r.n);
    CHECK(parsed.d == r.d);
    CHECK(parsed.omega == r.omega);
    CHECK(parsed.eps == r.eps);
    CHECK(parsed.stages.size() == 2);
    CHECK(parsed.stages[1].name == "merge");
    CHECK(parsed.stages[1].rounds == 400);
    CHECK(parsed.connected == r.connected);
    CHECK(parsed.witness_size == -1);
}

TEST_CASE("csv header is the pinned column set") {
    CHECK(csv_header() ==
          "seed,n,d,mode,omega,eps,t_budget,b_budget,rounds_used,edges_accepted,"
          "stage,failed_stage,k_tested,connected,check_mode,witness_size,wallclock_ms");
}
