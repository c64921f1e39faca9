#pragma once

#include <cstdint>

#include "ccdh/types.hpp"

namespace ccdh {

namespace detail {
// splitmix64; used for seeding and sub-stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace detail

// Deterministic 64-bit generator (xoshiro256**, 32 bytes of state, fully
// specified here so sequences reproduce across platforms and builds).
// Engines are cheap enough to hold one per reservoir.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = detail::mix64(x++);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw ParamError("uniform_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform real in [0, 1), 53-bit resolution.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool coin() { return (next_u64() & 1) != 0; }

  // Independent sub-stream addressed by (domain, index); counter-splitting
  // off the master seed, so sub-streams never depend on draw order.
  SeededRng split(std::uint64_t domain, std::uint64_t index = 0) const {
    std::uint64_t s = detail::mix64(seed_ ^ detail::mix64(domain));
    s = detail::mix64(s ^ detail::mix64(index ^ 0xa02b'dbf7'bb3c'0a7ULL));
    return SeededRng(s);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

}  // namespace ccdh
