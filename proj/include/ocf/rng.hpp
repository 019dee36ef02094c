#pragma once

#include <cstdint>
#include <random>

#include "ocf/bits.hpp"

namespace ocf {

using Rng = std::mt19937_64;

// Stream splitting: every randomized routine owns a seed and derives one
// independent sub-seed per logical stream index, so results never depend on
// how work is chunked across workers. splitmix64 finalization keeps derived
// seeds well spread even for adjacent (seed, stream) pairs.
inline std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng makeRng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(deriveSeed(seed, stream));
}

// Uniform point of F2^n. Masking a single 64-bit draw keeps the consumption
// pattern independent of n.
inline std::uint32_t drawPoint(Rng& rng, int n) {
  return static_cast<std::uint32_t>(rng()) & dimensionMask(n);
}

// Bernoulli(p) from the top 53 bits of one draw; avoids the unspecified
// behaviour of std::bernoulli_distribution across library versions.
inline bool drawBernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  std::uint64_t threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
  return (rng() >> 11) < threshold;
}

}  // namespace ocf
