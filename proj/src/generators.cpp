#include "ocf/generators.hpp"

#include <stdexcept>

#include "ocf/rng.hpp"

namespace ocf {

namespace {

void checkPublicDimension(int n, const char* what) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument(std::string(what) + ": n must be in [1, 24], got " +
                                std::to_string(n));
  }
}

void checkAlpha(std::uint32_t alpha, int n, const char* what) {
  alpha &= dimensionMask(n);
  if (alpha == 0) {
    throw std::invalid_argument(std::string(what) + ": direction alpha must be nonzero");
  }
}

}  // namespace

BooleanFunction genZero(int n) {
  checkPublicDimension(n, "genZero");
  return BooleanFunction(n);
}

BooleanFunction genAllOnes(int n) {
  checkPublicDimension(n, "genAllOnes");
  BooleanFunction f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, true);
  return f;
}

BooleanFunction genHyperplaneSide(int n, std::uint32_t alpha, int side) {
  checkPublicDimension(n, "genHyperplaneSide");
  checkAlpha(alpha, n, "genHyperplaneSide");
  if (side != 0 && side != 1) {
    throw std::invalid_argument("genHyperplaneSide: side must be 0 or 1");
  }
  BooleanFunction f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, dot(alpha, x) == side);
  return f;
}

BooleanFunction genRandomDensity(int n, double p, std::uint64_t seed) {
  checkPublicDimension(n, "genRandomDensity");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("genRandomDensity: p must be in [0, 1]");
  }
  BooleanFunction f(n);
  Rng rng = makeRng(seed);
  for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, drawBernoulli(rng, p));
  return f;
}

BooleanFunction genAllNonzero(int n) {
  checkPublicDimension(n, "genAllNonzero");
  BooleanFunction f = genAllOnes(n);
  f.set(0, false);
  return f;
}

BooleanFunction genHyperplaneMinusNoise(int n, std::uint32_t alpha, double delta,
                                        std::uint64_t seed) {
  checkPublicDimension(n, "genHyperplaneMinusNoise");
  checkAlpha(alpha, n, "genHyperplaneMinusNoise");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("genHyperplaneMinusNoise: delta must be in [0, 1]");
  }
  BooleanFunction f(n);
  Rng rng = makeRng(seed);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f.set(x, dot(alpha, x) == 1 && !drawBernoulli(rng, delta));
  }
  return f;
}

BooleanFunction genUniform(int n, std::uint64_t seed) {
  checkPublicDimension(n, "genUniform");
  Rng rng = makeRng(seed);
  std::vector<std::uint64_t> words((n >= 6 ? (std::size_t(1) << (n - 6)) : 1));
  for (auto& w : words) w = rng();
  return BooleanFunction(n, words);
}

}  // namespace ocf
