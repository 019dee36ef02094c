#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocf/boolean_function.hpp"
#include "ocf/subspace.hpp"
#include "ocf/testers.hpp"

#include <json.hpp>

namespace ocf {

// Span of k uniform vectors; 1 <= k <= n + 8. Same sampler the subspace
// tester uses, so these experiments exercise the tester's actual
// distribution of H.
Subspace randomSubspace(int n, int k, std::uint64_t seed);

// |H| * restricted coefficient = sum_{x in H} f(x) * (-1)^{<alpha, x>},
// computed by enumerating H directly.
std::int64_t restrictedCoefficientScaled(const BooleanFunction& f, const Subspace& h,
                                         std::uint32_t alpha);

// Monte Carlo check of a tail bound: empirical frequency of the deviation
// event against the stated bound plus slack, where
// slack = 3 * sqrt(pb (1 - pb) / trials) + 1/trials with pb the bound clamped
// to [0, 1]. Thresholds use each trial's realized |H|; the reported bound is
// aggregated conservatively at the smallest |H| observed.
struct ConcentrationReport {
  std::string kind;         // "coefficient" or "moment"
  std::string description;  // instance description
  int n = 0;
  std::uint32_t alpha = 0;  // coefficient experiments only
  int k = 0;
  double eta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t exceedCount = 0;
  std::uint64_t hMin = 0;
  double hMean = 0.0;
  double deviationThreshold = 0.0;  // at hMin
  double empiricalFrequency = 0.0;
  double paperBound = 0.0;          // at hMin
  double slack = 0.0;
  bool satisfied = false;
  std::uint64_t seed = 0;

  nlohmann::json toJson() const;
  static std::string csvHeader();
  std::string csvRow() const;
};

// Event: |f^_H(alpha) - f^(alpha)| >= 2/h + eta. Bound: 14 / (h eta^2).
// Requires the exact spectrum, so n <= 20.
ConcentrationReport coeffDeviationExperiment(const BooleanFunction& f, std::uint32_t alpha,
                                             int k, double eta, std::uint64_t trials,
                                             std::uint64_t seed, int jobs = 1);

// Event: |A_H - A| >= 16/h + eta for the normalized fourth moment A.
// n <= 16.
ConcentrationReport momentDeviationExperiment(const BooleanFunction& f, int k, double eta,
                                              std::uint64_t trials, std::uint64_t seed,
                                              int jobs = 1);

// Parameter presets tying the deviation experiments to the subspace test's
// soundness analysis: gamma = eps^2/100, eta1 = (eps/10)^8, eta2 = (eps/10)^4.
struct SoundnessPresets {
  double gamma = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
};
SoundnessPresets soundnessPresets(double eps);

// Empirical reject-rate curve of one tester over a list of eps values,
// against instances with exact distance verified per row.
struct PowerCurveRow {
  std::string test;
  double eps = 0.0;
  int k = 0;
  double meanDim = 0.0;  // subspace rows only
  double exactDistance = 0.0;
  double rejectRate = 0.0;
  double meanQueries = 0.0;
  std::uint64_t trials = 0;
};

struct PowerCurve {
  std::string family;
  std::vector<PowerCurveRow> rows;

  static std::string csvHeader();
  std::string toCsv() const;
  nlohmann::json toJson() const;
};

PowerCurve powerCurve(const BooleanFunction& f, const std::string& familyLabel,
                      const std::vector<double>& epsList, std::uint64_t trials,
                      const std::string& testKind, std::uint64_t seed, int jobs = 1);

// Cross-checks spectral identities and distance characterizations over
// exhaustive and random sweeps; used by the CLI verify command.
struct SweepStats {
  std::uint64_t functionsChecked = 0;
  std::uint64_t violations = 0;
  std::string firstViolation;

  void merge(const SweepStats& o) {
    functionsChecked += o.functionsChecked;
    if (violations == 0 && o.violations > 0) firstViolation = o.firstViolation;
    violations += o.violations;
  }
};

SweepStats characterizationSweepExhaustive(int n, int jobs = 1);
SweepStats characterizationSweepRandom(int n, std::uint64_t count, std::uint64_t seed,
                                       int jobs = 1);

}  // namespace ocf
