#include "ocf/testers.hpp"

#include <cmath>

#include "ocf/analysis.hpp"
#include "ocf/cayley.hpp"
#include "ocf/function_io.hpp"
#include "ocf/oracle.hpp"

namespace ocf {

namespace {

void checkEps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
}

}  // namespace

int edgeSchedule(double eps) {
  checkEps(eps);
  long double r = 8.0L / eps;
  return static_cast<int>(std::ceil(r * std::log2(r)));
}

int subspaceSchedule(double eps, int n, ScheduleMode mode, std::uint64_t queryBudget) {
  checkEps(eps);
  checkDimension(n, kMaxDimension, "subspaceSchedule");
  if (mode == ScheduleMode::Paper) {
    long double h = std::pow(10.0L / eps, 20.0L);
    if (h > std::ldexp(1.0L, n) || h > static_cast<long double>(queryBudget)) {
      throw std::invalid_argument(
          "paper schedule refused: target subspace size (10/eps)^20 ~ 2^" +
          std::to_string(static_cast<long long>(std::ceil(std::log2(static_cast<double>(h))))) +
          " exceeds the domain or the query budget of " + std::to_string(queryBudget) +
          "; use the practical schedule");
    }
    return static_cast<int>(std::ceil(20.0L * std::log2(10.0L / eps)));
  }
  int k = static_cast<int>(std::ceil(3.0L * std::log2(1.0L / eps))) + 5;
  return std::min(n, k);
}

nlohmann::json TestReport::toJson(bool includeWitness) const {
  nlohmann::json j{{"test", test},       {"n", n},
                   {"eps", eps},         {"seed", seed},
                   {"k", k},             {"accepted", accepted},
                   {"queries", queries}, {"rawProbes", rawProbes}};
  if (dimH >= 0) j["dimH"] = dimH;
  if (includeWitness && witness) j["witness"] = witness->toJson(n);
  return j;
}

TestReport edgeSamplingTest(const BooleanFunction& f, double eps, std::uint64_t seed,
                            int kOverride) {
  checkEps(eps);
  TestReport r;
  r.test = "edge";
  r.n = f.n();
  r.eps = eps;
  r.seed = seed;
  r.k = kOverride >= 1 ? kOverride : edgeSchedule(eps);

  Rng rng = makeRng(seed);
  std::vector<std::uint32_t> vertices(r.k);
  for (auto& v : vertices) v = drawPoint(rng, f.n());

  CountingOracle oracle(f);
  SampleGraph g = sampleInducedSubgraph(oracle, f.n(), vertices);
  auto cycle = findOddCycle(g);
  if (cycle) {
    r.accepted = false;
    r.witness = cycleToWitness(*cycle);
    if (!r.witness->validate(f)) {
      throw std::logic_error("edgeSamplingTest: cycle produced an invalid witness");
    }
  }
  r.queries = oracle.queries();
  r.rawProbes = oracle.rawProbes();
  return r;
}

Subspace sampleSubspace(Rng& rng, int n, int k) {
  std::vector<std::uint32_t> gens(k);
  for (auto& g : gens) g = drawPoint(rng, n);
  return Subspace(n, gens);
}

TestReport subspaceRestrictionTest(const BooleanFunction& f, double eps, std::uint64_t seed,
                                   ScheduleMode mode, int kOverride,
                                   std::uint64_t queryBudget) {
  checkEps(eps);
  TestReport r;
  r.test = "subspace";
  r.n = f.n();
  r.eps = eps;
  r.seed = seed;
  r.k = kOverride >= 1 ? kOverride : subspaceSchedule(eps, f.n(), mode, queryBudget);

  Rng rng = makeRng(seed);
  Subspace h = sampleSubspace(rng, f.n(), r.k);
  r.dimH = h.dim();
  if ((1ull << h.dim()) > queryBudget) {
    throw std::invalid_argument("subspaceRestrictionTest: 2^dim(H) exceeds the query budget");
  }

  CountingOracle oracle(f);
  BooleanFunction g(h.dim());
  std::vector<std::uint32_t> pts = h.elements();
  for (std::uint32_t y = 0; y < pts.size(); ++y) {
    if (oracle(pts[y])) g.set(y, true);
  }

  OcfDecision dec = isOcfSpectral(g);
  if (!dec.isOcf) {
    r.accepted = false;
    // The restriction's shortest odd witness, mapped back through the basis;
    // XOR relations are linear, so validity transfers to f. Witness
    // extraction is the one step that grows with 2^dim beyond the query
    // cost; dimensions above 24 are unreachable (n <= 24).
    auto wg = shortestOddWitnessUnchecked(g, kMaxDimension);
    if (!wg) {
      throw std::logic_error("subspaceRestrictionTest: non-OCF restriction without witness");
    }
    OcfWitness ambient;
    for (std::uint32_t y : wg->points) ambient.points.push_back(h.element(y));
    r.witness = std::move(ambient);
    if (!r.witness->validate(f)) {
      throw std::logic_error("subspaceRestrictionTest: mapped witness failed validation");
    }
  }
  r.queries = oracle.queries();
  r.rawProbes = oracle.rawProbes();
  return r;
}

}  // namespace ocf
