#pragma once

#include <cstdint>

#include "ocf/boolean_function.hpp"

namespace ocf {

// Instance families, 1 <= n <= 24. Families parameterized by a direction
// alpha require alpha != 0.

BooleanFunction genZero(int n);
BooleanFunction genAllOnes(int n);

// Indicator of the affine side {x : <alpha, x> = side}.
BooleanFunction genHyperplaneSide(int n, std::uint32_t alpha, int side);

// Each point independently 1 with probability p.
BooleanFunction genRandomDensity(int n, double p, std::uint64_t seed);

// Indicator of F2^n \ {0}.
BooleanFunction genAllNonzero(int n);

// Random subset of the side <alpha, x> = 1: each point of the side is
// dropped independently with probability delta. Stays a subset of one affine
// side for every draw.
BooleanFunction genHyperplaneMinusNoise(int n, std::uint32_t alpha, double delta,
                                        std::uint64_t seed);

// Uniformly random truth table.
BooleanFunction genUniform(int n, std::uint64_t seed);

}  // namespace ocf
