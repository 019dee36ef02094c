#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ocf/boolean_function.hpp"
#include "ocf/dyadic.hpp"
#include "ocf/spectrum.hpp"
#include "ocf/witness.hpp"

namespace ocf {

// Exact relative distance, kept as a dyadic rational so equality checks are
// bit-exact.
struct DistanceValue {
  Dyadic exact;
  double value() const { return exact.value(); }
};

// f is odd-cycle-free iff no odd multiset of support points XORs to zero.
// Spectral route: OCF iff some w[alpha] equals -|supp(f)|. Returns the
// smallest such alpha on success.
struct OcfDecision {
  bool isOcf = false;
  std::uint32_t alpha = 0;  // meaningful only when isOcf
};

OcfDecision isOcfSpectral(const BooleanFunction& f);
OcfDecision isOcfSpectral(const Spectrum& s);

// Independent combinatorial route, O(2^n * |supp|): OCF iff supp(f) is empty
// or some alpha != 0 has <alpha, x> = 1 for every support point.
OcfDecision isOcfHyperplane(const BooleanFunction& f);

// Exact distance to the nearest OCF function: (rho + min_alpha coeff) / 2,
// i.e. (|supp| + min w) / 2^(n+1).
DistanceValue exactDistance(const BooleanFunction& f);
DistanceValue exactDistance(const Spectrum& s);

// Independent combinatorial route: min over alpha != 0 of
// |{x in supp : <alpha, x> = 0}| / 2^n (flipping those points leaves the
// support inside one affine side, which is OCF); computed without any
// Fourier transform. Agrees with exactDistance on every input.
DistanceValue exactDistanceCombinatorial(const BooleanFunction& f);

// Normalized fourth moment sum_alpha coeff(alpha)^4. Computed two ways
// (spectral power sum and a direct combinatorial count of support triples
// x, y with x ^ y in supp) whenever n is small enough for the second path;
// the two are asserted equal before returning.
Dyadic fourthMoment(const BooleanFunction& f);

// Spectral-only path, for callers that already paid for the transform.
Dyadic fourthMomentFromSpectrum(const Spectrum& s);

// Exact distance to the nearest linear function: min(rho, 1/2 + min coeff).
DistanceValue linearityDistanceExact(const BooleanFunction& f);

// Cross-checks every characterization on one function; empty string when all
// agree, otherwise a description of the first mismatch. The checks:
//  * isOcfSpectral == isOcfHyperplane == (no odd witness)
//  * exactDistance == exactDistanceCombinatorial
//  * witness validity whenever one is returned
//  * every w[alpha] >= -|supp| + 2 * 2^n * distance (tight at the argmin)
std::string checkCharacterizations(const BooleanFunction& f);

}  // namespace ocf
