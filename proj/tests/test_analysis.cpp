#include <doctest.h>

#include "ocf/analysis.hpp"
#include "ocf/generators.hpp"
#include "ocf/rng.hpp"
#include "ocf/witness.hpp"

using namespace ocf;

namespace {

// Reference check: does any odd subset of the support XOR to zero?
// Exponential in the support size; usable only for tiny supports.
bool hasOddZeroSubsetBrute(const BooleanFunction& f) {
  std::vector<std::uint32_t> supp = f.supportPoints();
  std::size_t s = supp.size();
  REQUIRE(s <= 20);
  for (std::uint64_t mask = 1; mask < (1ull << s); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) acc ^= supp[i];
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("decision procedure examples") {
  CHECK(isOcfSpectral(genZero(4)).isOcf);
  CHECK_FALSE(isOcfSpectral(genAllOnes(4)).isOcf);
  CHECK(isOcfSpectral(genHyperplaneSide(6, 0b101, 1)).isOcf);
  CHECK_FALSE(isOcfSpectral(genAllNonzero(3)).isOcf);

  // A function whose support contains 0 fails immediately: {0} is a loop.
  BooleanFunction f(3);
  f.set(0, true);
  CHECK_FALSE(isOcfSpectral(f).isOcf);
  CHECK_FALSE(isOcfHyperplane(f).isOcf);
}

TEST_CASE("spectral and covering decisions agree exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t tables = 1ull << (1u << n);
    for (std::uint64_t idx = 0; idx < tables; ++idx) {
      BooleanFunction f(n, {idx});
      OcfDecision a = isOcfSpectral(f);
      OcfDecision b = isOcfHyperplane(f);
      REQUIRE(a.isOcf == b.isOcf);
      if (a.isOcf && f.supportSize() > 0) {
        // Reported vector must separate the whole support.
        REQUIRE(b.alpha != 0);
        for (std::uint32_t x : f.supportPoints()) REQUIRE(dot(b.alpha, x) == 1);
        Spectrum s = wht(f);
        REQUIRE(s.w[a.alpha] == -static_cast<std::int32_t>(f.supportSize()));
      }
    }
  }
}

TEST_CASE("decisions agree with the subset-sum reference on sparse functions") {
  Rng rng = makeRng(31337);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 7);
    BooleanFunction f(n);
    int pts = static_cast<int>(rng() % 7);
    for (int i = 0; i < pts; ++i) f.set(drawPoint(rng, n), true);
    bool expect = !hasOddZeroSubsetBrute(f);
    CHECK(isOcfSpectral(f).isOcf == expect);
    CHECK(isOcfHyperplane(f).isOcf == expect);
  }
}

TEST_CASE("distance examples") {
  CHECK(exactDistance(genAllOnes(4)).exact == Dyadic(1, 1));
  CHECK(exactDistance(genAllNonzero(2)).exact == Dyadic(1, 2));
  CHECK(exactDistance(genZero(5)).exact == Dyadic(0, 0));
  CHECK(exactDistance(genHyperplaneSide(8, 0b11, 1)).exact == Dyadic(0, 0));
  // Side 0 contains the origin, which alone is a violation; the cheapest
  // repair flips half of the kernel.
  CHECK(exactDistance(genHyperplaneSide(8, 0b11, 0)).exact == Dyadic(1, 2));

  BooleanFunction f(3);
  f.set(0, true);
  CHECK(exactDistance(f).exact == Dyadic(1, 3));  // only repair: flip f(0)
}

TEST_CASE("spectral and covering distances agree") {
  Rng rng = makeRng(808);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 1 + static_cast<int>(rng() % 10);
    BooleanFunction f = genUniform(n, rng());
    CHECK(exactDistance(f).exact == exactDistanceCombinatorial(f).exact);
  }
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t tables = 1ull << (1u << n);
    for (std::uint64_t idx = 0; idx < tables; ++idx) {
      BooleanFunction f(n, {idx});
      REQUIRE(exactDistance(f).exact == exactDistanceCombinatorial(f).exact);
    }
  }
}

TEST_CASE("distance is zero exactly on the property") {
  Rng rng = makeRng(2024);
  for (int rep = 0; rep < 150; ++rep) {
    int n = 1 + static_cast<int>(rng() % 10);
    BooleanFunction f = genUniform(n, rng());
    CHECK((exactDistance(f).exact == Dyadic(0, 0)) == isOcfSpectral(f).isOcf);
  }
}

TEST_CASE("shortest witness examples") {
  BooleanFunction loop(3);
  loop.set(0, true);
  auto w1 = shortestOddWitness(loop);
  REQUIRE(w1.has_value());
  CHECK(w1->points == std::vector<std::uint32_t>{0});
  CHECK(w1->validate(loop));

  auto w3 = shortestOddWitness(genAllNonzero(2));
  REQUIRE(w3.has_value());
  CHECK(w3->k() == 3);
  CHECK(w3->validate(genAllNonzero(2)));

  CHECK_FALSE(shortestOddWitness(genHyperplaneSide(6, 0b1, 1)).has_value());
  CHECK_FALSE(shortestOddWitness(genZero(4)).has_value());
}

TEST_CASE("witness search honors its dimension guard") {
  CHECK_THROWS_AS(shortestOddWitness(BooleanFunction(21)), std::invalid_argument);
  CHECK_NOTHROW(shortestOddWitnessUnchecked(genAllOnes(4), 24));
}

TEST_CASE("witnesses are valid and minimal against the bounded oracle") {
  Rng rng = makeRng(4096);
  int found = 0;
  for (int rep = 0; rep < 300; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    BooleanFunction f = genUniform(n, rng());
    auto w = shortestOddWitness(f);
    auto oracle = minimalOddWitnessLengthUpTo5(f);
    if (!w.has_value()) {
      CHECK(isOcfSpectral(f).isOcf);
      CHECK_FALSE(oracle.has_value());
      continue;
    }
    ++found;
    CHECK(w->validate(f));
    CHECK(w->k() % 2 == 1);
    if (oracle.has_value()) {
      CHECK(w->k() == static_cast<std::size_t>(*oracle));
    } else {
      CHECK(w->k() > 5);
    }
  }
  CHECK(found > 200);  // dense random functions are almost never cycle-free
}

TEST_CASE("witness validation rejects malformed candidates") {
  BooleanFunction f = genAllNonzero(2);
  CHECK_FALSE(OcfWitness{{1, 2}}.validate(f));       // even length
  CHECK_FALSE(OcfWitness{{1, 2, 0}}.validate(f));    // 0 not in support
  CHECK_FALSE(OcfWitness{{1, 1, 2}}.validate(f));    // xor != 0
  CHECK(OcfWitness{{1, 2, 3}}.validate(f));
  CHECK(OcfWitness{{3, 3, 3, 2, 1}}.validate(f));    // repeats are allowed
}

TEST_CASE("fourth moment examples") {
  CHECK(fourthMoment(genAllNonzero(2)) == Dyadic(21, 6));
  CHECK(fourthMoment(genZero(6)) == Dyadic(0, 0));
  CHECK(fourthMoment(genAllOnes(6)) == Dyadic(1, 0));
  BooleanFunction f(2);
  f.set(3, true);  // a single character-like point: A = 4 * (1/4)^4 * ... ->
  CHECK(fourthMoment(f) == Dyadic(4, 8));  // all |w|=1: sum w^4 = 4, /2^(4n)
}

TEST_CASE("fourth moment matches a direct triple count") {
  Rng rng = makeRng(606);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 6);
    BooleanFunction f = genUniform(n, rng());
    // Count ordered support triples (x, y, z) with x ^ y ^ z in the support.
    std::vector<std::uint32_t> supp = f.supportPoints();
    unsigned long long closed = 0;
    for (std::uint32_t x : supp)
      for (std::uint32_t y : supp)
        for (std::uint32_t z : supp)
          if (f.value(x ^ y ^ z)) ++closed;
    Dyadic expect(static_cast<__int128>(closed), 3 * n);
    CHECK(fourthMoment(f) == expect);
    CHECK(fourthMomentFromSpectrum(wht(f)) == expect);
  }
}

TEST_CASE("linearity distance examples") {
  CHECK(linearityDistanceExact(genZero(7)).exact == Dyadic(0, 0));
  CHECK(linearityDistanceExact(genHyperplaneSide(7, 0b11, 1)).exact == Dyadic(0, 0));

  BooleanFunction andFn(2);
  andFn.set(0b11, true);  // x1 * x2
  CHECK(linearityDistanceExact(andFn).exact == Dyadic(1, 2));

  // The all-ones function is the negation of the zero character.
  CHECK(linearityDistanceExact(genAllOnes(5)).exact == Dyadic(1, 1));
}

TEST_CASE("linearity distance is a brute-force minimum over characters") {
  Rng rng = makeRng(1717);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + static_cast<int>(rng() % 7);
    BooleanFunction f = genUniform(n, rng());
    std::uint32_t best = f.size();
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      std::uint32_t diff = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x)
        if (f.value(x) != static_cast<bool>(dot(a, x))) ++diff;
      best = std::min(best, diff);
    }
    CHECK(linearityDistanceExact(f).exact == Dyadic(best, n));
  }
}

TEST_CASE("cross-characterization audit passes on random functions") {
  Rng rng = makeRng(55);
  for (int rep = 0; rep < 80; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8);
    BooleanFunction f = genUniform(n, rng());
    std::string report = checkCharacterizations(f);
    CHECK(report.empty());
    if (!report.empty()) MESSAGE(report);
  }
}

}  // TEST_SUITE
