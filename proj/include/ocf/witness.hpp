#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocf/boolean_function.hpp"

#include <json.hpp>

namespace ocf {

// Certificate that f is not odd-cycle-free: an odd number of support points
// XORing to zero. k = 1 means f(0) = 1. Points may repeat.
struct OcfWitness {
  std::vector<std::uint32_t> points;

  std::size_t k() const { return points.size(); }

  // Valid iff k is odd, every point lies in supp(f), and the XOR is zero.
  bool validate(const BooleanFunction& f) const;

  nlohmann::json toJson(int n) const;
};

// Breadth-first search over (element, parity) states reachable from (0, 0)
// by moves x -> x ^ s with s in supp(f); the first arrival at (0, 1) expands
// to a minimal-length odd witness. Guarded to n <= 20 (the state space is
// 2^(n+1)).
std::optional<OcfWitness> shortestOddWitness(const BooleanFunction& f);

// Same search without the public dimension guard; used internally where the
// caller controls the dimension. maxN caps what this build will attempt.
std::optional<OcfWitness> shortestOddWitnessUnchecked(const BooleanFunction& f, int maxN);

// Exhaustive minimal odd witness length restricted to k in {1, 3, 5}; nullopt
// when no witness of length <= 5 exists. Independent oracle for BFS
// minimality on small n.
std::optional<int> minimalOddWitnessLengthUpTo5(const BooleanFunction& f);

}  // namespace ocf
