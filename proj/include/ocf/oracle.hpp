#pragma once

#include <cstdint>
#include <vector>

#include "ocf/boolean_function.hpp"

namespace ocf {

// Query-counting view of a function. queries() is the number of DISTINCT
// points probed (repeat probes are memoized and free); rawProbes() counts
// every call. All testers and estimators report queries() and their reported
// numbers must match an independent recount of this oracle.
class CountingOracle {
 public:
  explicit CountingOracle(const BooleanFunction& f)
      : f_(&f), seen_((std::size_t(1) << f.n()) / 64 + 1, 0) {}

  bool operator()(std::uint32_t x) {
    ++rawProbes_;
    std::uint64_t bit = 1ull << (x & 63);
    std::uint64_t& word = seen_[x >> 6];
    if (!(word & bit)) {
      word |= bit;
      ++distinct_;
    }
    return f_->value(x);
  }

  std::uint64_t queries() const { return distinct_; }
  std::uint64_t rawProbes() const { return rawProbes_; }

 private:
  const BooleanFunction* f_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t distinct_ = 0;
  std::uint64_t rawProbes_ = 0;
};

}  // namespace ocf
