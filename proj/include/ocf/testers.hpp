#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ocf/boolean_function.hpp"
#include "ocf/rng.hpp"
#include "ocf/subspace.hpp"
#include "ocf/witness.hpp"

#include <json.hpp>

namespace ocf {

enum class ScheduleMode { Paper, Practical };

inline constexpr std::uint64_t kDefaultQueryBudget = 1ull << 24;

// Vertex-sample size for the edge-sampling test: ceil((8/eps) * log2(8/eps)).
// eps = 1/8 gives 384.
int edgeSchedule(double eps);

// Generator count for the subspace test.
//  * Paper mode targets |H| ~ (10/eps)^20 and is refused whenever that
//    exceeds 2^n or the query budget; at the default budget of 2^24 it is
//    refused for every eps of interest, which is the point: the analysed
//    schedule is astronomically larger than desk scale.
//  * Practical mode: min(n, ceil(3 * log2(1/eps)) + 5).
int subspaceSchedule(double eps, int n, ScheduleMode mode,
                     std::uint64_t queryBudget = kDefaultQueryBudget);

// One-sided test outcome. accepted=false always carries a witness that
// validates against the tested function, so a rejection is a proof.
struct TestReport {
  std::string test;  // "edge" or "subspace"
  int n = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int k = 0;               // sampled vertices (edge) / generators (subspace)
  int dimH = -1;           // realized dim(H), subspace test only
  bool accepted = true;
  std::optional<OcfWitness> witness;
  std::uint64_t queries = 0;  // distinct points probed
  std::uint64_t rawProbes = 0;

  nlohmann::json toJson(bool includeWitness = true) const;
};

// Samples k uniform vertices, queries the C(k,2) pairwise differences (plus
// f(0) once when k >= 2), and accepts iff the induced sample has no odd
// cycle. Rejections convert the cycle's consecutive differences into a
// witness. kOverride substitutes the schedule's k when >= 1.
TestReport edgeSamplingTest(const BooleanFunction& f, double eps, std::uint64_t seed,
                            int kOverride = 0);

// Spans k uniform vectors, restricts f to the resulting subspace H (2^dim(H)
// queries exactly), and accepts iff the restriction is OCF. Rejections carry
// the restriction's shortest odd witness mapped back through the basis to
// ambient coordinates.
TestReport subspaceRestrictionTest(const BooleanFunction& f, double eps, std::uint64_t seed,
                                   ScheduleMode mode = ScheduleMode::Practical,
                                   int kOverride = 0,
                                   std::uint64_t queryBudget = kDefaultQueryBudget);

// Shared subspace sampler: H = span of k points drawn with drawPoint.
Subspace sampleSubspace(Rng& rng, int n, int k);

}  // namespace ocf
