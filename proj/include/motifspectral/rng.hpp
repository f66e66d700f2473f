#pragma once

#include <cstdint>

namespace motifspectral {

/// SplitMix64 counter-based generator (the mixer behind SplittableRandom).
/// The state advances by a fixed odd constant and the output is a bijective
/// mix of the state, so streams derived from distinct keys never interfere.
/// Everything randomized in this library draws from named streams of this
/// generator, which makes runs bit-reproducible given the seed.
struct SplitMix64 {
    std::uint64_t state = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix(state);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection (no modulo bias).
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }
};

/// Independent stream for (seed, purpose). Purposes are small constants
/// documented at their point of use; distinct purposes give streams that
/// can be consumed at different rates without coupling.
inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t purpose) {
    return SplitMix64{SplitMix64::mix(seed ^ SplitMix64::mix(purpose + 0x632BE59BD9B4E019ULL))};
}

/// One draw of Bernoulli(p).
inline bool bernoulli(SplitMix64& rng, double p) { return rng.next_double() < p; }

/// One draw of Poisson(lambda) by inversion (sequential search); large
/// means are split into chunks, which is exact by Poisson additivity.
std::int64_t poisson(SplitMix64& rng, double lambda);

}  // namespace motifspectral
