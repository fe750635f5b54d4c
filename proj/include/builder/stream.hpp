// stream.hpp — lazy uniform-random-order proposal stream over the edges of K_n.
//
// Real mode emits a uniform without-replacement prefix of the C(n,2) edges by
// rejection-sampling pairs against a seen-set: consumers only ever read
// O(n log n) of the ~n^2/2 edges, so nothing is materialized up front and
// expected retries per draw stay O(1).
//
// Auxiliary mode emits num_phases independent blocks of phase_length rounds;
// the seen-set resets at each block boundary, so edges never repeat within a
// block but may repeat across blocks.
#pragma once
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "builder/edge.hpp"
#include "builder/rng.hpp"

namespace builder {

struct StreamMode {
    enum class Kind { Real, Auxiliary };
    Kind kind = Kind::Real;
    uint32_t num_phases = 0;
    uint64_t phase_length = 0;

    static StreamMode real() { return {}; }
    static StreamMode auxiliary(uint32_t phases, uint64_t length) {
        if (phases < 1 || length < 1)
            throw std::invalid_argument("auxiliary mode requires num_phases >= 1 and phase_length >= 1");
        return {Kind::Auxiliary, phases, length};
    }
    bool is_real() const { return kind == Kind::Real; }
};

struct Proposal {
    uint64_t round;  // 1-based
    Edge edge;
};

class StreamExhausted : public std::runtime_error {
public:
    StreamExhausted() : std::runtime_error("proposal stream exhausted") {}
};

class ProposalStream {
public:
    ProposalStream(uint32_t n, uint64_t seed, StreamMode mode = StreamMode::real())
        : n_(n), seed_(seed), mode_(mode), rng_(make_rng(seed, 0x5eed)) {
        if (n < 2) throw std::invalid_argument("stream requires n >= 2");
    }

    uint32_t n() const { return n_; }
    uint64_t seed() const { return seed_; }
    const StreamMode& mode() const { return mode_; }
    uint64_t round() const { return round_; }

    uint64_t total_edges() const {
        return static_cast<uint64_t>(n_) * (n_ - 1) / 2;
    }
    uint64_t max_rounds() const {
        return mode_.is_real() ? total_edges()
                               : mode_.phase_length * mode_.num_phases;
    }
    bool exhausted() const { return round_ >= max_rounds(); }

    // Phase (1-based) that the next proposal belongs to; always 1 in real mode.
    uint32_t current_phase() const {
        if (mode_.is_real()) return 1;
        return static_cast<uint32_t>(round_ / mode_.phase_length) + 1;
    }

    Proposal next() {
        if (exhausted()) throw StreamExhausted();
        if (!mode_.is_real() && round_ % mode_.phase_length == 0) seen_.clear();
        Edge e = draw_unseen();
        seen_.insert(e.key());
        ++round_;
        return {round_, e};
    }

private:
    Edge draw_unseen() {
        for (;;) {
            auto a = static_cast<VertexId>(uniform_below(rng_, n_));
            auto b = static_cast<VertexId>(uniform_below(rng_, n_));
            if (a == b) continue;
            Edge e = make_edge(a, b);
            if (!seen_.count(e.key())) return e;
        }
    }

    uint32_t n_;
    uint64_t seed_;
    StreamMode mode_;
    std::mt19937_64 rng_;
    std::unordered_set<uint64_t> seen_;
    uint64_t round_ = 0;
};

// Number of distinct edges proposed in two or more phases of an
// auxiliary-mode log.
uint64_t repeated_edge_count(const std::vector<std::pair<uint32_t, Edge>>& log);

}  // namespace builder
