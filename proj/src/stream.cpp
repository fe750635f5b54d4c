#include "builder/stream.hpp"

#include <unordered_map>

namespace builder {

uint64_t repeated_edge_count(const std::vector<std::pair<uint32_t, Edge>>& log) {
    // first phase an edge was seen in; UINT32_MAX once counted as repeated
    std::unordered_map<uint64_t, uint32_t> first_phase;
    uint64_t repeated = 0;
    for (const auto& [phase, e] : log) {
        auto [it, inserted] = first_phase.try_emplace(e.key(), phase);
        if (inserted) continue;
        if (it->second != UINT32_MAX && it->second != phase) {
            ++repeated;
            it->second = UINT32_MAX;
        }
    }
    return repeated;
}

}  // namespace builder
