#include "builder/runner.hpp"

namespace builder {

TrialReport run_builder(ProposalStream& stream, Strategy& strategy, BudgetLedger& ledger,
                        AcceptedGraph& graph) {
    while (ledger.rounds_left() && !stream.exhausted()) {
        Proposal p = stream.next();
        ledger.note_round();
        if (strategy.decide(p.round, p.edge) == Decision::Accept) {
            if (!ledger.can_accept()) {
                ledger.note_override();
            } else {
                graph.add_edge(p.edge);
                ledger.note_accept();
                strategy.on_accepted(p.round, p.edge);
            }
        }
    }
    TrialReport report;
    report.rounds_used = ledger.rounds_used;
    report.edges_accepted = ledger.edges_accepted;
    report.budget_overrides = ledger.overrides;
    strategy.finalize(report);
    return report;
}

RunResult run_builder(ProposalStream& stream, Strategy& strategy, BudgetLedger& ledger) {
    AcceptedGraph graph(stream.n());
    TrialReport report = run_builder(stream, strategy, ledger, graph);
    return {std::move(graph), std::move(report)};
}

}  // namespace builder
