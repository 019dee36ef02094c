#pragma once

#include <cstdint>
#include <vector>

#include "ocf/bits.hpp"

namespace ocf {

// Dense truth table of f : F2^n -> {0,1}, one bit per point, bit j of an
// index = coordinate j. Public surfaces (files, generators, CLI) require
// 1 <= n <= 24; n = 0 is additionally allowed here because restricting to the
// trivial subspace {0} yields a zero-dimensional function.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n) : n_(n) {
    checkDimension(n, kMaxDimension, "BooleanFunction");
    words_.assign(wordCount(n), 0);
  }

  BooleanFunction(int n, const std::vector<std::uint64_t>& words) : n_(n), words_(words) {
    checkDimension(n, kMaxDimension, "BooleanFunction");
    words_.resize(wordCount(n), 0);
    maskTail();
  }

  int n() const { return n_; }
  std::uint32_t size() const { return 1u << n_; }

  bool value(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63)) & 1ull; }

  void set(std::uint32_t x, bool v) {
    std::uint64_t bit = 1ull << (x & 63);
    if (v)
      words_[x >> 6] |= bit;
    else
      words_[x >> 6] &= ~bit;
  }

  std::uint32_t supportSize() const {
    std::uint64_t s = 0;
    for (std::uint64_t w : words_) s += std::popcount(w);
    return static_cast<std::uint32_t>(s);
  }

  std::vector<std::uint32_t> supportPoints() const {
    std::vector<std::uint32_t> pts;
    pts.reserve(supportSize());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        pts.push_back(static_cast<std::uint32_t>((wi << 6) + b));
        w &= w - 1;
      }
    }
    return pts;
  }

  double density() const { return static_cast<double>(supportSize()) / size(); }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BooleanFunction& a, const BooleanFunction& b) { return !(a == b); }

 private:
  static std::size_t wordCount(int n) { return n >= 6 ? (std::size_t(1) << (n - 6)) : 1; }

  void maskTail() {
    if (n_ < 6) words_[0] &= (1ull << (1u << n_)) - 1ull;
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace ocf
