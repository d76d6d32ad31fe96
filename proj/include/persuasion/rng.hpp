#pragma once

#include <cstdint>

namespace persuasion {

/// Name of the generator recorded in simulation reports.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
///
/// Streams for independent trials are derived as
///   state0 = mix(mix(seed) + trial_index),
/// so any trial's draws depend only on (seed, trial_index). This keeps
/// simulations reproducible regardless of execution order or thread count.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t state) : state_(state) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 substream(uint64_t seed, uint64_t index) {
        return SplitMix64(mix(mix(seed) + index));
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, bound), bound > 0 (Lemire multiply-shift).
    uint64_t next_below(uint64_t bound) {
        const unsigned __int128 product =
            static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(bound);
        return static_cast<uint64_t>(product >> 64);
    }

private:
    uint64_t state_;
};

}  // namespace persuasion
