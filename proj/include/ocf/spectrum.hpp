#pragma once

#include <cstdint>
#include <vector>

#include "ocf/boolean_function.hpp"

namespace ocf {

// Integer-scaled Fourier data: coefficient(alpha) = w[alpha] / 2^n with
// w[alpha] = sum_{x in supp(f)} (-1)^{<alpha, x>}. Invariants:
//  * w[0] = |supp(f)|
//  * sum_alpha w[alpha]^2 = 2^n * |supp(f)|   (Parseval)
//  * w[alpha] >= max(-|supp(f)|, -2^(n-1))
// Values fit int32_t for all n <= 24.
struct Spectrum {
  int n = 0;
  std::uint32_t supportSize = 0;
  std::vector<std::int32_t> w;

  double coefficient(std::uint32_t alpha) const {
    return static_cast<double>(w[alpha]) / static_cast<double>(1u << n);
  }

  std::int32_t minW() const;
  std::uint32_t argMinW() const;  // smallest index attaining minW
};

// In-place Walsh-Hadamard butterfly, O(n 2^n).
Spectrum wht(const BooleanFunction& f);

// Quadratic-time reference transform, an independent oracle for wht (n <= 14).
Spectrum whtNaive(const BooleanFunction& f);

// Parseval check, used by tests; returns true iff the identity holds exactly.
bool parsevalHolds(const Spectrum& s);

}  // namespace ocf
