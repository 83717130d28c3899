#ifndef FBMREC_RNG_HPP
#define FBMREC_RNG_HPP

#include <array>
#include <cstdint>

#include "fbmrec/gauss.hpp"

namespace fbmrec {

// splitmix64 finalizer (Steele, Lea & Flood / Vigna). Part of the published
// seeding contract: do not change.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Replicate seed derivation: the (index+1)-th output of a splitmix64 stream
// seeded with `master`. Makes every replicate independent of execution order
// and worker count.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_mix(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// xoshiro256++ (Blackman & Vigna), period 2^256-1, seeded from a single
// 64-bit value through splitmix64. Normal variates use the AS 241 inverse
// CDF on a 53-bit uniform. Both choices are frozen: sampled paths are a
// pure, bit-stable function of the seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            word = splitmix64_mix(sm);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1): (k + 1/2) / 2^53 for k in [0,2^53).
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() { return detail::inverse_normal_cdf(uniform01()); }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace fbmrec

#endif
