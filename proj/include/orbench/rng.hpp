#pragma once

#include <cstdint>
#include <vector>

#include "orbench/format.hpp"
#include "orbench/types.hpp"

namespace orbench {

// Platform-stable randomness: splitmix64 for seed mixing, xoshiro256** for
// draws, 53-bit mantissa convention for floating values.  Never use
// std::uniform_*_distribution here: datasets must be byte-identical across
// standard libraries.

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for the index-th instance of a batch; collision-free for consecutive
/// indices because the pre-mix states are distinct modulo 2^64.
constexpr std::uint64_t derive_instance_seed(std::uint64_t master_seed,
                                             std::uint64_t index) {
  return splitmix64_mix(master_seed + kSplitMixGamma * (index + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, bound); bound >= 1.  Debiased by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1) with 53 random mantissa bits.
  scalar_t real01();

  scalar_t real_in(scalar_t lo, scalar_t hi);
  scalar_t money_in(scalar_t lo, scalar_t hi) { return round1(real_in(lo, hi)); }
  scalar_t rate_in(scalar_t lo, scalar_t hi) { return round4(real_in(lo, hi)); }

  bool coin() { return (next_u64() >> 63) != 0; }

  /// In-place Fisher-Yates; deterministic across platforms.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_[4];
};

}  // namespace orbench
