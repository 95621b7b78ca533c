#include "orbench/rng.hpp"

namespace orbench {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  // xoshiro256** state expanded from the seed via splitmix64.
  std::uint64_t s = seed;
  for (auto& word : state_) {
    s += kSplitMixGamma;
    word = splitmix64_mix(s);
  }
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection from the top so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

scalar_t Rng::real01() {
  return static_cast<scalar_t>(next_u64() >> 11) * 0x1.0p-53;
}

scalar_t Rng::real_in(scalar_t lo, scalar_t hi) {
  return lo + (hi - lo) * real01();
}

}  // namespace orbench
