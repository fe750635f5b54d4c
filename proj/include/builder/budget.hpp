// budget.hpp — the (t, b) round/acceptance ledger.
#pragma once
#include <cstdint>

namespace builder {

enum class Decision { Reject = 0, Accept = 1 };

struct BudgetLedger {
    uint64_t t = 0;  // round ceiling
    uint64_t b = 0;  // acceptance ceiling
    uint64_t rounds_used = 0;
    uint64_t edges_accepted = 0;
    uint64_t overrides = 0;  // Accepts clamped to Reject at the b ceiling

    bool can_accept() const { return edges_accepted < b; }
    bool rounds_left() const { return rounds_used < t; }

    void note_round() { ++rounds_used; }
    void note_accept() { ++edges_accepted; }
    void note_override() { ++overrides; }
};

}  // namespace builder
