#include "ocf/spectrum.hpp"

#include <algorithm>

#include "ocf/bits.hpp"

namespace ocf {

std::int32_t Spectrum::minW() const {
  return *std::min_element(w.begin(), w.end());
}

std::uint32_t Spectrum::argMinW() const {
  return static_cast<std::uint32_t>(std::min_element(w.begin(), w.end()) - w.begin());
}

Spectrum wht(const BooleanFunction& f) {
  Spectrum s;
  s.n = f.n();
  s.supportSize = f.supportSize();
  std::uint32_t size = f.size();
  s.w.resize(size);
  for (std::uint32_t x = 0; x < size; ++x) s.w[x] = f.value(x) ? 1 : 0;
  // In-place butterfly; after round j, w holds sums signed by coordinate
  // subsets of {0..j}. int32 never overflows: |values| <= 2^n <= 2^24.
  for (std::uint32_t half = 1; half < size; half <<= 1) {
    for (std::uint32_t base = 0; base < size; base += half << 1) {
      for (std::uint32_t i = base; i < base + half; ++i) {
        std::int32_t a = s.w[i];
        std::int32_t b = s.w[i + half];
        s.w[i] = a + b;
        s.w[i + half] = a - b;
      }
    }
  }
  return s;
}

Spectrum whtNaive(const BooleanFunction& f) {
  checkDimension(f.n(), 14, "whtNaive");
  Spectrum s;
  s.n = f.n();
  s.supportSize = f.supportSize();
  std::uint32_t size = f.size();
  s.w.assign(size, 0);
  for (std::uint32_t alpha = 0; alpha < size; ++alpha) {
    std::int32_t acc = 0;
    for (std::uint32_t x = 0; x < size; ++x) {
      if (f.value(x)) acc += dot(alpha, x) ? -1 : 1;
    }
    s.w[alpha] = acc;
  }
  return s;
}

bool parsevalHolds(const Spectrum& s) {
  unsigned __int128 sum = 0;
  for (std::int32_t v : s.w) {
    sum += static_cast<unsigned __int128>(static_cast<std::int64_t>(v) * v);
  }
  unsigned __int128 expect =
      (static_cast<unsigned __int128>(1) << s.n) * s.supportSize;
  return sum == expect;
}

}  // namespace ocf
