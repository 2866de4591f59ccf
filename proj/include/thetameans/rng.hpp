// Fixed, documented PRNG for reproducible identity sweeps.
//
// Generator: xorshift64* (shift triple 12/25/27, multiplier
// 2685821657736338717). States are derived from a user seed with the
// splitmix64 finalizer, so reports reproduce bit-for-bit across platforms.
// Sweeps assign one stream per sample index, never per thread:
//   state0(seed, index) = splitmix64(seed ^ (0x9E3779B97F4A7C15 * (index+1)))
// Doubles are built from the top 53 bits scaled by 2^-53.
#ifndef THETAMEANS_RNG_HPP
#define THETAMEANS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace thetameans {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    static SampleRng for_index(std::uint64_t seed, std::uint64_t index) {
        return SampleRng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ULL;
    }

    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    double uniform01() { return std::ldexp(static_cast<double>(next() >> 11), -53); }

    // uniform on (lo, hi]: 1 - u has range (0, 1]
    double uniform(double lo, double hi) { return hi - (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

} // namespace thetameans

#endif
