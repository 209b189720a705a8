#pragma once

#include <cmath>
#include <cstdint>

namespace stablesde {

/// Counter-based random stream built on the SplitMix64 mixing function.
///
/// Each (seed, stream_id) pair addresses its own deterministic sequence:
/// output j is mix64(key + j*GAMMA) with key derived from (seed, stream_id).
/// Parallel workers own disjoint stream_ids and never share a stream, so a
/// fixed (seed, stream_id, call sequence) reproduces bit-identical draws on
/// any platform with IEEE-754 doubles.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix64(mix64(seed + kGamma) ^ mix64(stream_id + kGamma2))), ctr_(0) {}

    std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * kGamma); }

    /// Uniform on (0,1), 53-bit mantissa, never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double exponential() { return -std::log(uniform()); }

    std::uint64_t seed_key() const { return key_; }
    std::uint64_t counter() const { return ctr_; }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kGamma2 = 0xBF58476D1CE4E5B9ull;

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t ctr_;
};

}  // namespace stablesde
