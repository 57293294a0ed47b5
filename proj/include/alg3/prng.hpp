#pragma once

#include <cstdint>

namespace alg3 {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform, which keeps scrambles and test fixtures reproducible.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough value in [0, n); n must be small.
    uint64_t below(uint64_t n) { return next() % n; }

    /// Integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

}  // namespace alg3
