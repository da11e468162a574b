#pragma once

#include <cstdint>

namespace gmepw {

// SplitMix64 (Steele/Lea/Flood). Chosen as the repo-wide generator because
// its output sequence is a documented fixed function of the seed, identical
// on every platform; that stability is part of the CLI contract.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [lo, hi] via modulo; the slight bias is irrelevant
    // here and keeping the mapping trivial keeps it reproducible forever.
    long long uniform(long long lo, long long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }
};

} // namespace gmepw
