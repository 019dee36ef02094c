#include "ocf/experiments.hpp"

#include <cmath>
#include <sstream>

#include "ocf/analysis.hpp"
#include "ocf/generators.hpp"
#include "ocf/parallel.hpp"
#include "ocf/rng.hpp"
#include "ocf/spectrum.hpp"

namespace ocf {

Subspace randomSubspace(int n, int k, std::uint64_t seed) {
  checkDimension(n, kMaxDimension, "randomSubspace");
  if (k < 1 || k > n + 8) {
    throw std::invalid_argument("randomSubspace: k must lie in [1, n + 8]");
  }
  Rng rng = makeRng(seed);
  return sampleSubspace(rng, n, k);
}

std::int64_t restrictedCoefficientScaled(const BooleanFunction& f, const Subspace& h,
                                         std::uint32_t alpha) {
  if (h.n() != f.n()) {
    throw std::invalid_argument("restrictedCoefficientScaled: dimension mismatch");
  }
  std::int64_t acc = 0;
  for (std::uint32_t x : h.elements()) {
    if (f.value(x)) acc += dot(alpha, x) ? -1 : 1;
  }
  return acc;
}

nlohmann::json ConcentrationReport::toJson() const {
  nlohmann::json j{{"kind", kind},
                   {"description", description},
                   {"n", n},
                   {"k", k},
                   {"eta", eta},
                   {"trials", trials},
                   {"exceedCount", exceedCount},
                   {"hMin", hMin},
                   {"hMean", hMean},
                   {"deviationThreshold", deviationThreshold},
                   {"empiricalFrequency", empiricalFrequency},
                   {"paperBound", paperBound},
                   {"slack", slack},
                   {"satisfied", satisfied},
                   {"seed", seed}};
  if (kind == "coefficient") j["alpha"] = alpha;
  return j;
}

std::string ConcentrationReport::csvHeader() {
  return "kind,description,n,alpha,k,eta,trials,exceed_count,h_min,h_mean,"
         "deviation_threshold,empirical_frequency,bound,slack,satisfied,seed";
}

std::string ConcentrationReport::csvRow() const {
  std::ostringstream os;
  os << kind << ',' << description << ',' << n << ',' << alpha << ',' << k << ',' << eta << ','
     << trials << ',' << exceedCount << ',' << hMin << ',' << hMean << ','
     << deviationThreshold << ',' << empiricalFrequency << ',' << paperBound << ',' << slack
     << ',' << (satisfied ? 1 : 0) << ',' << seed;
  return os.str();
}

namespace {

struct DeviationTally {
  std::uint64_t exceed = 0;
  std::uint64_t hSum = 0;
  std::uint64_t hMin = ~0ull;

  void merge(const DeviationTally& o) {
    exceed += o.exceed;
    hSum += o.hSum;
    hMin = std::min(hMin, o.hMin);
  }
};

// Shared tail-bound evaluation: threshold(h) and bound(h) as callables.
template <typename Event>
ConcentrationReport runDeviation(const char* kind, const BooleanFunction& f, int k, double eta,
                                 std::uint64_t trials, std::uint64_t seed, int jobs,
                                 double thresholdBase, double boundConst, Event event) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (k < 1 || k > f.n() + 8) {
    throw std::invalid_argument("generator count k must lie in [1, n + 8]");
  }

  DeviationTally tally = parallelReduce<DeviationTally>(
      trials, jobs, [&](DeviationTally& t, std::uint64_t i) {
        Rng rng = makeRng(seed, i);
        Subspace h = sampleSubspace(rng, f.n(), k);
        std::uint64_t hsize = h.size();
        double threshold = thresholdBase / static_cast<double>(hsize) + eta;
        if (event(h, threshold)) ++t.exceed;
        t.hSum += hsize;
        t.hMin = std::min(t.hMin, hsize);
      });

  ConcentrationReport r;
  r.kind = kind;
  r.n = f.n();
  r.k = k;
  r.eta = eta;
  r.trials = trials;
  r.seed = seed;
  r.exceedCount = tally.exceed;
  r.hMin = tally.hMin;
  r.hMean = static_cast<double>(tally.hSum) / static_cast<double>(trials);
  r.deviationThreshold = thresholdBase / static_cast<double>(tally.hMin) + eta;
  r.empiricalFrequency = static_cast<double>(tally.exceed) / static_cast<double>(trials);
  r.paperBound = boundConst / (static_cast<double>(tally.hMin) * eta * eta);
  double pb = std::clamp(r.paperBound, 0.0, 1.0);
  r.slack = 3.0 * std::sqrt(pb * (1.0 - pb) / static_cast<double>(trials)) +
            1.0 / static_cast<double>(trials);
  r.satisfied = r.empiricalFrequency <= r.paperBound + r.slack;
  return r;
}

}  // namespace

ConcentrationReport coeffDeviationExperiment(const BooleanFunction& f, std::uint32_t alpha,
                                             int k, double eta, std::uint64_t trials,
                                             std::uint64_t seed, int jobs) {
  checkDimension(f.n(), 20, "coeffDeviationExperiment");
  Spectrum s = wht(f);
  double exact = s.coefficient(alpha & dimensionMask(f.n()));
  std::uint32_t a = alpha & dimensionMask(f.n());

  ConcentrationReport r = runDeviation(
      "coefficient", f, k, eta, trials, seed, jobs, 2.0, 14.0,
      [&](const Subspace& h, double threshold) {
        double restricted = static_cast<double>(restrictedCoefficientScaled(f, h, a)) /
                            static_cast<double>(h.size());
        return std::fabs(restricted - exact) >= threshold;
      });
  r.alpha = a;
  std::ostringstream desc;
  desc << "n=" << f.n() << " support=" << f.supportSize() << " coeff=" << exact;
  r.description = desc.str();
  return r;
}

ConcentrationReport momentDeviationExperiment(const BooleanFunction& f, int k, double eta,
                                              std::uint64_t trials, std::uint64_t seed,
                                              int jobs) {
  checkDimension(f.n(), 16, "momentDeviationExperiment");
  double exact = fourthMomentFromSpectrum(wht(f)).value();

  ConcentrationReport r = runDeviation(
      "moment", f, k, eta, trials, seed, jobs, 16.0, 500.0,
      [&](const Subspace& h, double threshold) {
        BooleanFunction g = restrict(f, h);
        double momentH = fourthMomentFromSpectrum(wht(g)).value();
        return std::fabs(momentH - exact) >= threshold;
      });
  std::ostringstream desc;
  desc << "n=" << f.n() << " support=" << f.supportSize() << " moment=" << exact;
  r.description = desc.str();
  return r;
}

SoundnessPresets soundnessPresets(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  SoundnessPresets p;
  p.gamma = eps * eps / 100.0;
  p.eta1 = std::pow(eps / 10.0, 8.0);
  p.eta2 = std::pow(eps / 10.0, 4.0);
  return p;
}

std::string PowerCurve::csvHeader() {
  return "family,test,eps,k,mean_dim,exact_distance,reject_rate,mean_queries,trials";
}

std::string PowerCurve::toCsv() const {
  std::ostringstream os;
  os << csvHeader() << '\n';
  for (const auto& r : rows) {
    os << family << ',' << r.test << ',' << r.eps << ',' << r.k << ',' << r.meanDim << ','
       << r.exactDistance << ',' << r.rejectRate << ',' << r.meanQueries << ',' << r.trials
       << '\n';
  }
  return os.str();
}

nlohmann::json PowerCurve::toJson() const {
  nlohmann::json rowsJson = nlohmann::json::array();
  for (const auto& r : rows) {
    rowsJson.push_back(nlohmann::json{{"test", r.test},
                                      {"eps", r.eps},
                                      {"k", r.k},
                                      {"meanDim", r.meanDim},
                                      {"exactDistance", r.exactDistance},
                                      {"rejectRate", r.rejectRate},
                                      {"meanQueries", r.meanQueries},
                                      {"trials", r.trials}});
  }
  return nlohmann::json{{"family", family}, {"rows", rowsJson}};
}

namespace {

struct TrialTally {
  std::uint64_t rejects = 0;
  std::uint64_t querySum = 0;
  std::uint64_t dimSum = 0;

  void merge(const TrialTally& o) {
    rejects += o.rejects;
    querySum += o.querySum;
    dimSum += o.dimSum;
  }
};

}  // namespace

PowerCurve powerCurve(const BooleanFunction& f, const std::string& familyLabel,
                      const std::vector<double>& epsList, std::uint64_t trials,
                      const std::string& testKind, std::uint64_t seed, int jobs) {
  if (testKind != "edge" && testKind != "subspace") {
    throw std::invalid_argument("powerCurve: test kind must be \"edge\" or \"subspace\"");
  }
  if (trials == 0) throw std::invalid_argument("powerCurve: trials must be >= 1");
  PowerCurve curve;
  curve.family = familyLabel;
  double dist = exactDistance(f).value();

  for (std::size_t e = 0; e < epsList.size(); ++e) {
    double eps = epsList[e];
    PowerCurveRow row;
    row.test = testKind;
    row.eps = eps;
    row.exactDistance = dist;
    row.trials = trials;
    row.k = testKind == "edge" ? edgeSchedule(eps)
                               : subspaceSchedule(eps, f.n(), ScheduleMode::Practical);
    std::uint64_t rowSeed = deriveSeed(seed, e);

    TrialTally tally = parallelReduce<TrialTally>(
        trials, jobs, [&](TrialTally& t, std::uint64_t i) {
          std::uint64_t trialSeed = deriveSeed(rowSeed, i);
          TestReport rep = testKind == "edge"
                               ? edgeSamplingTest(f, eps, trialSeed)
                               : subspaceRestrictionTest(f, eps, trialSeed);
          if (!rep.accepted) ++t.rejects;
          t.querySum += rep.queries;
          if (rep.dimH >= 0) t.dimSum += static_cast<std::uint64_t>(rep.dimH);
        });

    row.rejectRate = static_cast<double>(tally.rejects) / static_cast<double>(trials);
    row.meanQueries = static_cast<double>(tally.querySum) / static_cast<double>(trials);
    row.meanDim = testKind == "subspace"
                      ? static_cast<double>(tally.dimSum) / static_cast<double>(trials)
                      : 0.0;
    curve.rows.push_back(row);
  }
  return curve;
}

SweepStats characterizationSweepExhaustive(int n, int jobs) {
  checkDimension(n, 4, "characterizationSweepExhaustive");
  if (n < 1) throw std::invalid_argument("characterizationSweepExhaustive: n >= 1");
  std::uint64_t count = 1ull << (1u << n);
  return parallelReduce<SweepStats>(count, jobs, [&](SweepStats& s, std::uint64_t idx) {
    BooleanFunction f(n, {idx});
    std::string bad = checkCharacterizations(f);
    ++s.functionsChecked;
    if (!bad.empty()) {
      if (s.violations == 0) {
        s.firstViolation = "n=" + std::to_string(n) + " table=" + std::to_string(idx) + ": " + bad;
      }
      ++s.violations;
    }
  });
}

SweepStats characterizationSweepRandom(int n, std::uint64_t count, std::uint64_t seed,
                                       int jobs) {
  if (n < 1) throw std::invalid_argument("characterizationSweepRandom: n >= 1");
  checkDimension(n, 20, "characterizationSweepRandom");
  return parallelReduce<SweepStats>(count, jobs, [&](SweepStats& s, std::uint64_t idx) {
    BooleanFunction f = genUniform(n, deriveSeed(seed, idx));
    std::string bad = checkCharacterizations(f);
    ++s.functionsChecked;
    if (!bad.empty()) {
      if (s.violations == 0) {
        s.firstViolation = "n=" + std::to_string(n) + " seed-index=" + std::to_string(idx) +
                           ": " + bad;
      }
      ++s.violations;
    }
  });
}

}  // namespace ocf
