#pragma once

#include <cstdint>
#include <random>

namespace skc {

// Repo-wide random number generator. Every randomized operation takes an
// explicit seed and draws through std::mt19937_64 plus the raw-bit mappings
// below. The standard pins the mt19937_64 output stream exactly, and we do
// not use std::*_distribution (whose algorithms are implementation-defined),
// so a published seed reproduces the same graph/partition everywhere.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) by rejection. n must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= reject_below) return r % n;
  }
}

inline bool bernoulli(Rng& rng, double p) { return uniform_double(rng) < p; }

}  // namespace skc
