#pragma once

/// Deterministic splittable RNG (splitmix64).  Sampled reports must be
/// byte-identical across runs and platforms, so no std:: distributions here.

#include <cstdint>

namespace cacti {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// uniform in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }
};

} // namespace cacti
