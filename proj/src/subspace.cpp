#include "ocf/subspace.hpp"

#include <algorithm>

#include "ocf/bits.hpp"

namespace ocf {

Subspace::Subspace(int n, const std::vector<std::uint32_t>& generators)
    : n_(n), raw_(generators) {
  checkDimension(n, kMaxDimension, "Subspace");
  std::uint32_t mask = dimensionMask(n);
  // Gaussian elimination over GF(2), reducing above and below so the basis
  // is in reduced row-echelon form; sorting by pivot makes spanOf of the
  // standard basis reproduce it in coordinate order.
  std::vector<std::uint32_t> rows;
  for (std::uint32_t g : generators) {
    std::uint32_t v = g & mask;
    for (std::uint32_t r : rows) {
      std::uint32_t pivot = 1u << (31 - std::countl_zero(r));
      if (v & pivot) v ^= r;
    }
    if (v == 0) continue;
    std::uint32_t pivot = 1u << (31 - std::countl_zero(v));
    for (std::uint32_t& r : rows) {
      if (r & pivot) r ^= v;
    }
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end());
  basis_ = std::move(rows);
}

bool Subspace::contains(std::uint32_t x) const {
  std::uint32_t v = x & dimensionMask(n_);
  for (std::uint32_t r : basis_) {
    std::uint32_t pivot = 1u << (31 - std::countl_zero(r));
    if (v & pivot) v ^= r;
  }
  return v == 0;
}

std::uint32_t Subspace::element(std::uint32_t y) const {
  std::uint32_t x = 0;
  std::uint32_t bits = y;
  while (bits) {
    int j = std::countr_zero(bits);
    x ^= basis_[j];
    bits &= bits - 1;
  }
  return x;
}

std::vector<std::uint32_t> Subspace::elements() const {
  std::uint32_t count = size();
  std::vector<std::uint32_t> pts(count);
  pts[0] = 0;
  // Gray-free prefix trick: y with lowest set bit b equals (y without b)
  // xor basis[b], and y & (y-1) was already filled.
  for (std::uint32_t y = 1; y < count; ++y) {
    pts[y] = pts[y & (y - 1)] ^ basis_[std::countr_zero(y)];
  }
  return pts;
}

Subspace spanOf(int n, const std::vector<std::uint32_t>& generators) {
  return Subspace(n, generators);
}

BooleanFunction restrict(const BooleanFunction& f, const Subspace& h) {
  if (h.n() != f.n()) {
    throw std::invalid_argument("restrict: subspace dimension mismatch (function n=" +
                                std::to_string(f.n()) + ", subspace over n=" +
                                std::to_string(h.n()) + ")");
  }
  BooleanFunction g(h.dim());
  std::uint32_t count = h.size();
  std::uint32_t x = 0;
  g.set(0, f.value(0));
  for (std::uint32_t y = 1; y < count; ++y) {
    // Gray-code order: step y flips combination bit countr_zero(y), so the
    // ambient point moves by a single basis XOR.
    x ^= h.basis()[std::countr_zero(y)];
    g.set(y ^ (y >> 1), f.value(x));
  }
  return g;
}

}  // namespace ocf
