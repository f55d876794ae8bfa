#pragma once

#include <cstdint>

namespace partmon {

/// SplitMix64 (Vigna's public-domain mixer). Output is fully determined
/// by the 64-bit state, identical on every platform and toolchain, which
/// is what makes recorded counterexamples replayable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [lo, hi] inclusive, by modulo reduction.
    std::uint64_t bounded(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

/// The SplitMix64 finalizer as a standalone hash step.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent stream for trial t of a seeded run. Streams are derived
/// from (seed, t) alone, so trials can run in any order or concurrently
/// and still reproduce bit-identically.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed ^ mix64(trial + 0x9E3779B97F4A7C15ULL)));
}

}  // namespace partmon
