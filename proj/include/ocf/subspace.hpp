#pragma once

#include <cstdint>
#include <vector>

#include "ocf/boolean_function.hpp"

namespace ocf {

// Linear subspace of F2^n held as a reduced row-echelon basis, rows sorted
// ascending by pivot position. Spanning the standard basis vectors therefore
// reproduces them in coordinate order, which makes restrict() to the full
// space the identity. The generators originally passed in are kept verbatim
// for reporting.
class Subspace {
 public:
  Subspace(int n, const std::vector<std::uint32_t>& generators);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::uint32_t size() const { return 1u << dim(); }

  const std::vector<std::uint32_t>& basis() const { return basis_; }
  const std::vector<std::uint32_t>& rawGenerators() const { return raw_; }

  bool contains(std::uint32_t x) const;

  // Element for combination y (bit j of y selects basis vector j).
  std::uint32_t element(std::uint32_t y) const;

  // All 2^dim elements, in combination order (element(0) = 0 first).
  std::vector<std::uint32_t> elements() const;

 private:
  int n_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::uint32_t> raw_;
};

Subspace spanOf(int n, const std::vector<std::uint32_t>& generators);

// Restriction g(y) = f(element(y)) of f to H, a function on dim(H) variables.
BooleanFunction restrict(const BooleanFunction& f, const Subspace& h);

}  // namespace ocf
