#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "ocf/bits.hpp"

namespace ocf {

// Exact dyadic rational num / 2^log2den. Normalized so that num is odd or
// zero (zero forces log2den = 0). Numerators stay below 2^122 for every
// quantity produced here (worst case: fourth moments at n = 24), which the
// comparison logic relies on.
struct Dyadic {
  __int128 num = 0;
  int log2den = 0;

  Dyadic() = default;
  Dyadic(__int128 numerator, int log2Denominator) : num(numerator), log2den(log2Denominator) {
    normalize();
  }

  void normalize() {
    if (num == 0) {
      log2den = 0;
      return;
    }
    while ((num & 1) == 0 && log2den > 0) {
      num >>= 1;
      --log2den;
    }
  }

  Dyadic half() const { return Dyadic(num, log2den + 1); }
  Dyadic doubled() const { return log2den > 0 ? Dyadic(num, log2den - 1) : Dyadic(num * 2, 0); }

  double value() const { return std::ldexp(static_cast<double>(num), -log2den); }

  static int bitLength(unsigned __int128 v) {
    int b = 0;
    while (v > 0) {
      ++b;
      v >>= 1;
    }
    return b;
  }

  // Exact three-way compare; assumes |num| < 2^122 on both sides.
  int compare(const Dyadic& o) const {
    int sa = num > 0 ? 1 : (num < 0 ? -1 : 0);
    int sb = o.num > 0 ? 1 : (o.num < 0 ? -1 : 0);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    const Dyadic* lo = this;
    const Dyadic* hi = &o;
    int sign = 1;
    if (lo->log2den > hi->log2den) {
      lo = &o;
      hi = this;
      sign = -1;
    }
    int shift = hi->log2den - lo->log2den;
    unsigned __int128 mag = lo->num < 0 ? -static_cast<unsigned __int128>(lo->num)
                                        : static_cast<unsigned __int128>(lo->num);
    if (bitLength(mag) + shift > 126) {
      // The shifted side dominates in magnitude.
      return sa * sign;
    }
    __int128 lhs = lo->num << shift;
    __int128 rhs = hi->num;
    int c = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    return sign > 0 ? c : -c;
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.log2den == b.log2den;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return a.compare(b) >= 0; }

  std::string toString() const {
    if (log2den == 0) return toDecimal(num);
    return toDecimal(num) + "/2^" + std::to_string(log2den);
  }
};

}  // namespace ocf
