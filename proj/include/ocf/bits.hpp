#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ocf {

// Index convention used everywhere: bit j of an index encodes coordinate j,
// so bit 0 is the least significant bit and strings render coordinate j at
// position j counted from the right.

inline constexpr int kMaxDimension = 24;

inline std::uint32_t dimensionMask(int n) {
  return n >= 32 ? ~0u : ((1u << n) - 1u);
}

inline int parity32(std::uint32_t x) { return std::popcount(x) & 1; }

// Parity of the inner product <a, x> over F2.
inline int dot(std::uint32_t a, std::uint32_t x) { return parity32(a & x); }

inline void checkDimension(int n, int maxN, const char* what) {
  if (n < 0 || n > maxN) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(n) + " outside supported range [0, " +
                                std::to_string(maxN) + "]");
  }
}

inline std::string toDecimal(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace ocf
