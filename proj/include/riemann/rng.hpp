#pragma once

#include <cstdint>

#include <riemann/normal.hpp>

namespace riemann {

// Counter-based generator: every output is a pure function of
// (seed, stream_id, counter), so streams split freely and replicates can run
// in any order or in parallel with identical results.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix(mix(seed + kGolden) ^ mix(stream_id + 2 * kGolden))) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(key_ + counter * kGolden);
    }

    // Uniform in the open interval (0,1), 53-bit resolution.
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal draw via the inverse CDF; fully deterministic.
    double gaussian(std::uint64_t counter) const { return norm_inv(uniform(counter)); }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
};

}  // namespace riemann
