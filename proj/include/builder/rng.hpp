// rng.hpp — deterministic RNG construction and bounded draws.
//
// std::uniform_int_distribution is implementation-defined, so all bounded
// draws go through uniform_below (Lemire rejection) to keep sequences
// byte-identical across compilers and standard libraries.
#pragma once
#include <cstdint>
#include <random>

namespace builder {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// One engine per (seed, tag) pair; tags keep independent consumers
// (stream, sampled checks, ...) from sharing a sequence.
inline std::mt19937_64 make_rng(uint64_t seed, uint64_t tag) {
    uint64_t s = seed ^ (0xA076'1D64'78BD'642FULL * (tag + 1));
    uint64_t a = splitmix64(s), b = splitmix64(s), c = splitmix64(s), d = splitmix64(s);
    std::seed_seq seq{static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
                      static_cast<uint32_t>(b), static_cast<uint32_t>(b >> 32),
                      static_cast<uint32_t>(c), static_cast<uint32_t>(c >> 32),
                      static_cast<uint32_t>(d), static_cast<uint32_t>(d >> 32)};
    return std::mt19937_64(seq);
}

inline uint64_t uniform_below(std::mt19937_64& g, uint64_t bound) {
    // Lemire's multiply-and-reject; uniform over [0, bound).
    uint64_t x = g();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (lo < threshold) {
            x = g();
            m = static_cast<__uint128_t>(x) * bound;
            lo = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

}  // namespace builder
