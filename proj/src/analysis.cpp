#include "ocf/analysis.hpp"

#include <sstream>

#include "ocf/bits.hpp"

namespace ocf {

OcfDecision isOcfSpectral(const Spectrum& s) {
  std::int32_t target = -static_cast<std::int32_t>(s.supportSize);
  for (std::uint32_t alpha = 0; alpha < s.w.size(); ++alpha) {
    if (s.w[alpha] == target) return {true, alpha};
  }
  return {false, 0};
}

OcfDecision isOcfSpectral(const BooleanFunction& f) { return isOcfSpectral(wht(f)); }

OcfDecision isOcfHyperplane(const BooleanFunction& f) {
  std::vector<std::uint32_t> supp = f.supportPoints();
  if (supp.empty()) return {true, 0};
  std::uint32_t size = f.size();
  for (std::uint32_t alpha = 1; alpha < size; ++alpha) {
    bool allOnSide = true;
    for (std::uint32_t x : supp) {
      if (dot(alpha, x) == 0) {
        allOnSide = false;
        break;
      }
    }
    if (allOnSide) return {true, alpha};
  }
  return {false, 0};
}

DistanceValue exactDistance(const Spectrum& s) {
  std::int64_t num = static_cast<std::int64_t>(s.supportSize) + s.minW();
  return {Dyadic(num, s.n + 1)};
}

DistanceValue exactDistance(const BooleanFunction& f) { return exactDistance(wht(f)); }

DistanceValue exactDistanceCombinatorial(const BooleanFunction& f) {
  std::vector<std::uint32_t> supp = f.supportPoints();
  if (supp.empty()) return {Dyadic(0, 0)};
  if (f.n() == 0) return {Dyadic(1, 0)};  // f(0) = 1 on a single-point domain
  std::uint32_t size = f.size();
  std::uint32_t best = static_cast<std::uint32_t>(supp.size());
  for (std::uint32_t alpha = 1; alpha < size; ++alpha) {
    std::uint32_t zeros = 0;
    for (std::uint32_t x : supp) {
      zeros += 1u - static_cast<std::uint32_t>(dot(alpha, x));
      if (zeros >= best) break;
    }
    if (zeros < best) best = zeros;
  }
  return {Dyadic(best, f.n())};
}

Dyadic fourthMomentFromSpectrum(const Spectrum& s) {
  unsigned __int128 sum = 0;
  for (std::int32_t v : s.w) {
    unsigned __int128 sq = static_cast<unsigned __int128>(static_cast<std::int64_t>(v) * v);
    sum += sq * sq;
  }
  return Dyadic(static_cast<__int128>(sum), 4 * s.n);
}

Dyadic fourthMoment(const BooleanFunction& f) {
  Dyadic spectral = fourthMomentFromSpectrum(wht(f));
  std::uint64_t s = f.supportSize();
  // Combinatorial path when affordable: with cnt(v) = ordered support pairs
  // XORing to v, sum_v cnt(v)^2 counts the ordered support triples (x, y, z)
  // whose closure x^y^z stays in the support, and that count is 2^(3n) times
  // the moment. Both paths must agree bit for bit.
  if (s * s <= (1ull << 28)) {
    std::vector<std::uint64_t> cnt(f.size(), 0);
    std::vector<std::uint32_t> supp = f.supportPoints();
    for (std::uint32_t x : supp) {
      for (std::uint32_t y : supp) cnt[x ^ y] += 1;
    }
    unsigned __int128 closedTriples = 0;
    for (std::uint64_t c : cnt) closedTriples += static_cast<unsigned __int128>(c) * c;
    Dyadic combinatorial(static_cast<__int128>(closedTriples), 3 * f.n());
    if (combinatorial != spectral) {
      throw std::logic_error("fourthMoment: spectral and combinatorial paths disagree");
    }
  }
  return spectral;
}

DistanceValue linearityDistanceExact(const BooleanFunction& f) {
  Spectrum s = wht(f);
  // min(rho, 1/2 + min coeff): the zero function sits at rho, the best
  // nonzero linear function at 1/2 + its coefficient.
  Dyadic rho(static_cast<std::int64_t>(s.supportSize), s.n);
  Dyadic viaMin(static_cast<std::int64_t>(1u << s.n) + 2 * static_cast<std::int64_t>(s.minW()),
                s.n + 1);
  return {rho <= viaMin ? rho : viaMin};
}

std::string checkCharacterizations(const BooleanFunction& f) {
  Spectrum s = wht(f);
  OcfDecision spectral = isOcfSpectral(s);
  OcfDecision hyper = isOcfHyperplane(f);
  std::optional<OcfWitness> witness =
      f.n() <= 20 ? shortestOddWitness(f) : std::nullopt;

  std::ostringstream bad;
  if (spectral.isOcf != hyper.isOcf) {
    bad << "spectral/hyperplane disagreement (spectral=" << spectral.isOcf << ")";
  } else if (f.n() <= 20 && spectral.isOcf != !witness.has_value()) {
    bad << "witness existence contradicts spectral decision";
  } else if (witness && !witness->validate(f)) {
    bad << "witness fails validation";
  } else {
    DistanceValue viaSpectrum = exactDistance(s);
    DistanceValue viaCounts = exactDistanceCombinatorial(f);
    if (viaSpectrum.exact != viaCounts.exact) {
      bad << "distance mismatch: spectral " << viaSpectrum.exact.toString() << " vs counting "
          << viaCounts.exact.toString();
    } else if (spectral.isOcf != (viaSpectrum.exact.num == 0)) {
      bad << "zero distance and OCF decision disagree";
    } else if (witness && (witness->k() == 1) != f.value(0)) {
      bad << "minimal witness length 1 must coincide with f(0)=1";
    } else if (!parsevalHolds(s)) {
      bad << "Parseval identity violated";
    }
  }
  return bad.str();
}

}  // namespace ocf
