// strategy.hpp — the online decision interface driven by the round loop.
//
// A strategy sees exactly one proposal at a time and has no access to the
// stream, so decisions are online by construction. The accepted graph and
// ledger are read-only views owned by the runner.
#pragma once
#include <cstdint>

#include "builder/budget.hpp"
#include "builder/edge.hpp"
#include "builder/report.hpp"

namespace builder {

class Strategy {
public:
    virtual ~Strategy() = default;

    virtual Decision decide(uint64_t round, Edge e) = 0;

    // Called only when the runner actually added the edge (the b ceiling can
    // override an Accept).
    virtual void on_accepted(uint64_t round, Edge e) = 0;

    // Fill per-stage stats and diagnostics once the run is over.
    virtual void finalize(TrialReport& report) = 0;
};

// Test strategies.
class AcceptAll final : public Strategy {
public:
    Decision decide(uint64_t, Edge) override { return Decision::Accept; }
    void on_accepted(uint64_t, Edge) override {}
    void finalize(TrialReport&) override {}
};

class RejectAll final : public Strategy {
public:
    Decision decide(uint64_t, Edge) override { return Decision::Reject; }
    void on_accepted(uint64_t, Edge) override {}
    void finalize(TrialReport&) override {}
};

}  // namespace builder
