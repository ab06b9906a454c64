#pragma once

#include <cstdint>
#include <random>

namespace cordial {

// All seeded sampling goes through std::mt19937_64, whose output sequence is
// fixed by the C++ standard. The standard distributions are not, so bounded
// draws use rejection sampling below instead of std::uniform_int_distribution.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64";

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace cordial
