// runner.hpp — the round loop: stream -> strategy -> ledger -> graph.
#pragma once
#include "builder/budget.hpp"
#include "builder/graph.hpp"
#include "builder/report.hpp"
#include "builder/strategy.hpp"
#include "builder/stream.hpp"

namespace builder {

// Consumes min(t, stream exhaustion) proposals against a caller-owned graph
// (the production strategies read it through a const reference). An Accept
// returned while the acceptance ledger is at its ceiling is overridden to
// Reject and counted as a budget override, which is distinct from a normal
// rejection.
TrialReport run_builder(ProposalStream& stream, Strategy& strategy, BudgetLedger& ledger,
                        AcceptedGraph& graph);

struct RunResult {
    AcceptedGraph graph;
    TrialReport report;
};

// Convenience wrapper that owns the graph; fine for strategies that do not
// inspect it.
RunResult run_builder(ProposalStream& stream, Strategy& strategy, BudgetLedger& ledger);

}  // namespace builder
