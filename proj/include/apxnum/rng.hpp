#pragma once

#include <cstdint>

namespace apx {

// Counter-based generator: output i of stream s is a pure function of
// (seed, s, i), so parallel workers can draw from disjoint sub-streams and a
// run is reproducible from the recorded 64-bit seed alone.  The mixing
// function is the SplitMix64 finalizer, applied to a Weyl sequence offset by
// a per-stream base.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL + 0x6A09E667F3BCC909ULL))) {}

    std::uint64_t next_u64() { return mix(base_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace apx
