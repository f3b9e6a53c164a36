#pragma once

#include <cstdint>

namespace ensemble {

// SplitMix64 (Steele/Lea/Vigna): 64-bit state advanced by the golden-ratio
// increment, output scrambled by two xorshift-multiplies. Chosen because the
// algorithm is a few lines to reimplement in any language, so cross-language
// ports can match this sampler distributionally. Bitwise reproducibility is
// promised within this implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1): top 53 bits of next().
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Seed of an independent substream derived from (seed, stream).
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace ensemble
