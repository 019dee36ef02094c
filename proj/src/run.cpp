#include "ocf/run.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ocf/analysis.hpp"
#include "ocf/cayley.hpp"
#include "ocf/estimators.hpp"
#include "ocf/experiments.hpp"
#include "ocf/function_io.hpp"
#include "ocf/generators.hpp"
#include "ocf/spectrum.hpp"
#include "ocf/testers.hpp"

namespace ocf {

namespace {

using nlohmann::json;

std::string isoTimestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> splitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct GenParams {
  std::string kind;
  int n = -1;
  std::string alpha;
  int side = 1;
  double p = 0.5;
  double delta = 0.1;
};

GenParams parseGenSpec(const std::string& spec) {
  GenParams g;
  std::size_t colon = spec.find(':');
  g.kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  if (g.kind.empty()) throw std::invalid_argument("--gen: missing kind");
  if (colon != std::string::npos) {
    for (const std::string& kv : splitList(spec.substr(colon + 1), ',')) {
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("--gen: expected key=value, got \"" + kv + "\"");
      }
      std::string key = kv.substr(0, eq);
      std::string val = kv.substr(eq + 1);
      try {
        if (key == "n")
          g.n = std::stoi(val);
        else if (key == "alpha")
          g.alpha = val;
        else if (key == "side")
          g.side = std::stoi(val);
        else if (key == "p")
          g.p = std::stod(val);
        else if (key == "delta")
          g.delta = std::stod(val);
        else
          throw std::invalid_argument("--gen: unknown key \"" + key + "\"");
      } catch (const std::invalid_argument&) {
        throw;
      } catch (const std::exception&) {
        throw std::invalid_argument("--gen: bad value for \"" + key + "\"");
      }
    }
  }
  return g;
}

BooleanFunction buildGenerated(const GenParams& g, std::uint64_t seed) {
  if (g.n < 1) throw std::invalid_argument("--gen: parameter n is required");
  if (g.kind == "zero") return genZero(g.n);
  if (g.kind == "allOnes") return genAllOnes(g.n);
  if (g.kind == "allNonzero") return genAllNonzero(g.n);
  if (g.kind == "randomDensity") return genRandomDensity(g.n, g.p, seed);
  if (g.kind == "uniform") return genUniform(g.n, seed);
  if (g.kind == "hyperplaneSide" || g.kind == "hyperplaneMinusNoise") {
    if (g.alpha.empty()) {
      throw std::invalid_argument("--gen: hyperplane kinds need alpha=<binary>");
    }
    std::uint32_t a = binaryToPoint(g.alpha, g.n);
    if (g.kind == "hyperplaneSide") return genHyperplaneSide(g.n, a, g.side);
    return genHyperplaneMinusNoise(g.n, a, g.delta, seed);
  }
  throw std::invalid_argument("--gen: unknown kind \"" + g.kind + "\"");
}

BooleanFunction loadInput(const RunConfig& cfg) {
  bool haveFile = !cfg.inPath.empty();
  bool haveGen = !cfg.genSpec.empty();
  if (haveFile == haveGen) {
    throw std::invalid_argument("exactly one of --in or --gen is required");
  }
  if (haveFile) return loadFunction(cfg.inPath);
  return buildGenerated(parseGenSpec(cfg.genSpec), cfg.seed);
}

json distanceJson(const DistanceValue& d) {
  return json{{"numerator", toDecimal(d.exact.num)},
              {"log2Denominator", d.exact.log2den},
              {"value", d.value()}};
}

void emitJson(std::ostream& out, const RunConfig& cfg, json payload) {
  payload["config"] = cfg.echo();
  if (!cfg.deterministic) payload["timestamp"] = isoTimestamp();
  out << payload.dump(2) << '\n';
}

int cmdGen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.genSpec.empty()) throw std::invalid_argument("gen: --gen <spec> is required");
  BooleanFunction f = buildGenerated(parseGenSpec(cfg.genSpec), cfg.seed);
  out << (cfg.sparse ? serializeSparse(f) : serializeDense(f));
  return 0;
}

int cmdCheck(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  OcfDecision dec = isOcfSpectral(f);
  json j{{"n", f.n()}, {"supportSize", f.supportSize()}, {"isOcf", dec.isOcf}};
  if (dec.isOcf) {
    j["alpha"] = pointToBinary(dec.alpha, f.n());
  } else if (f.n() <= 20) {
    auto w = shortestOddWitness(f);
    if (w) j["witness"] = w->toJson(f.n());
  } else {
    j["witness"] = nullptr;
    j["note"] = "witness extraction skipped for n > 20";
  }
  emitJson(out, cfg, std::move(j));
  return 0;
}

int cmdDistance(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  Spectrum s = wht(f);
  DistanceValue d = exactDistance(s);
  json j{{"n", f.n()},
         {"supportSize", s.supportSize},
         {"distance", distanceJson(d)},
         {"minW", s.minW()},
         {"argMinW", pointToBinary(s.argMinW(), f.n())},
         {"density", static_cast<double>(s.supportSize) / f.size()}};
  emitJson(out, cfg, std::move(j));
  return 0;
}

int cmdBipdist(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  DistanceValue bip = exactBipartitenessDistance(f);
  DistanceValue dist = exactDistance(f);
  json j{{"n", f.n()},
         {"bipartitenessDistance", distanceJson(bip)},
         {"ocfDistance", distanceJson(dist)},
         {"halfRelationExact", bip.exact == dist.exact.half()}};
  emitJson(out, cfg, std::move(j));
  return 0;
}

int cmdSpectrum(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  Spectrum s = wht(f);
  if (cfg.format == "csv") {
    out << "alpha,w\n";
    for (std::uint32_t a = 0; a < s.w.size(); ++a) {
      out << pointToBinary(a, f.n()) << ',' << s.w[a] << '\n';
    }
    return 0;
  }
  if (f.n() > 16) {
    throw std::invalid_argument("spectrum: use --format csv for n > 16");
  }
  json j{{"n", f.n()}, {"supportSize", s.supportSize}, {"w", s.w}};
  emitJson(out, cfg, std::move(j));
  return 0;
}

int cmdEstimate(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  Estimate e;
  if (cfg.command == "estimate-distance") {
    e = estimateOcfDistance(f, cfg.eps, cfg.seed, cfg.k);
  } else if (cfg.command == "estimate-minfourier") {
    e = estimateMinFourier(f, cfg.eps, cfg.seed);
  } else {
    e = estimateLinearityDistance(f, cfg.eps, cfg.seed);
  }
  emitJson(out, cfg, json{{"estimate", e.toJson()}});
  return 0;
}

int cmdTest(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sub != "edge" && cfg.sub != "subspace") {
    throw std::invalid_argument("test: expected subcommand edge or subspace");
  }
  BooleanFunction f = loadInput(cfg);
  ScheduleMode mode =
      cfg.schedule == "paper" ? ScheduleMode::Paper : ScheduleMode::Practical;
  if (cfg.schedule != "paper" && cfg.schedule != "practical") {
    throw std::invalid_argument("--schedule must be paper or practical");
  }

  auto runOne = [&](std::uint64_t seed) {
    return cfg.sub == "edge"
               ? edgeSamplingTest(f, cfg.eps, seed, cfg.k)
               : subspaceRestrictionTest(f, cfg.eps, seed, mode, cfg.k);
  };

  if (cfg.trials <= 1) {
    TestReport r = runOne(cfg.seed);
    emitJson(out, cfg, json{{"report", r.toJson()}});
    return 0;
  }

  std::uint64_t rejects = 0, querySum = 0, dimSum = 0;
  json firstReject;
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    TestReport r = runOne(deriveSeed(cfg.seed, i));
    if (!r.accepted) {
      if (rejects == 0) firstReject = r.toJson();
      ++rejects;
    }
    querySum += r.queries;
    if (r.dimH >= 0) dimSum += static_cast<std::uint64_t>(r.dimH);
  }
  json j{{"test", cfg.sub},
         {"trials", cfg.trials},
         {"rejects", rejects},
         {"rejectRate", static_cast<double>(rejects) / static_cast<double>(cfg.trials)},
         {"meanQueries", static_cast<double>(querySum) / static_cast<double>(cfg.trials)}};
  if (cfg.sub == "subspace") {
    j["meanDim"] = static_cast<double>(dimSum) / static_cast<double>(cfg.trials);
  }
  if (rejects > 0) j["firstReject"] = firstReject;
  emitJson(out, cfg, std::move(j));
  return 0;
}

int cmdExperiment(const RunConfig& cfg, std::ostream& out) {
  BooleanFunction f = loadInput(cfg);
  if (cfg.sub == "power") {
    std::vector<double> eps = cfg.epsList.empty() ? std::vector<double>{cfg.eps} : cfg.epsList;
    PowerCurve curve =
        powerCurve(f, cfg.genSpec.empty() ? cfg.inPath : cfg.genSpec, eps, cfg.trials,
                   cfg.tester, cfg.seed, cfg.jobs);
    if (cfg.format == "csv") {
      out << curve.toCsv();
    } else {
      emitJson(out, cfg, json{{"powerCurve", curve.toJson()}});
    }
    return 0;
  }
  if (cfg.sub != "coeffdev" && cfg.sub != "momentdev") {
    throw std::invalid_argument("experiment: expected coeffdev, momentdev or power");
  }

  std::vector<int> ks = cfg.kList.empty() ? std::vector<int>{cfg.k > 0 ? cfg.k : 8} : cfg.kList;
  std::vector<double> etas =
      cfg.etaList.empty() ? std::vector<double>{cfg.eta} : cfg.etaList;

  std::vector<ConcentrationReport> reports;
  std::uint64_t cell = 0;
  for (int k : ks) {
    for (double eta : etas) {
      std::uint64_t cellSeed = deriveSeed(cfg.seed, cell++);
      if (cfg.sub == "coeffdev") {
        if (cfg.alpha.empty()) {
          throw std::invalid_argument("experiment coeffdev: --alpha <binary> is required");
        }
        std::uint32_t a = binaryToPoint(cfg.alpha, f.n());
        reports.push_back(
            coeffDeviationExperiment(f, a, k, eta, cfg.trials, cellSeed, cfg.jobs));
      } else {
        reports.push_back(momentDeviationExperiment(f, k, eta, cfg.trials, cellSeed, cfg.jobs));
      }
    }
  }

  if (cfg.format == "csv") {
    out << ConcentrationReport::csvHeader() << '\n';
    for (const auto& r : reports) out << r.csvRow() << '\n';
    return 0;
  }
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r.toJson());
  emitJson(out, cfg, json{{"reports", arr}});
  return 0;
}

int cmdVerify(const RunConfig& cfg, std::ostream& out) {
  int nMax = cfg.nMax;
  if (nMax < 1 || nMax > 20) {
    throw std::invalid_argument("verify: --n-max must lie in [1, 20]");
  }
  std::uint64_t randomPerN = cfg.trials > 1 ? cfg.trials : 200;

  json sweeps = json::array();
  std::uint64_t totalViolations = 0;

  for (int n = 1; n <= std::min(nMax, 3); ++n) {
    SweepStats s = characterizationSweepExhaustive(n, cfg.jobs);
    totalViolations += s.violations;
    json js{{"n", n},
            {"mode", "exhaustive"},
            {"functionsChecked", s.functionsChecked},
            {"violations", s.violations}};
    if (s.violations) js["firstViolation"] = s.firstViolation;
    sweeps.push_back(std::move(js));
  }
  for (int n = std::min(nMax, 3) + 1; n <= nMax; ++n) {
    SweepStats s = characterizationSweepRandom(n, randomPerN, deriveSeed(cfg.seed, n), cfg.jobs);
    totalViolations += s.violations;
    json js{{"n", n},
            {"mode", "random"},
            {"functionsChecked", s.functionsChecked},
            {"violations", s.violations}};
    if (s.violations) js["firstViolation"] = s.firstViolation;
    sweeps.push_back(std::move(js));
  }

  // Transform oracle agreement on random tables.
  std::uint64_t whtChecked = 0, whtViolations = 0;
  for (int n = 1; n <= std::min(nMax, 10); ++n) {
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(randomPerN, 50); ++i) {
      BooleanFunction f = genUniform(n, deriveSeed(cfg.seed, 1000 + n * 64 + i));
      ++whtChecked;
      if (wht(f).w != whtNaive(f).w) ++whtViolations;
    }
  }
  totalViolations += whtViolations;
  sweeps.push_back(json{{"mode", "transform-agreement"},
                        {"functionsChecked", whtChecked},
                        {"violations", whtViolations}});

  emitJson(out, cfg,
           json{{"sweeps", sweeps}, {"totalViolations", totalViolations}});
  return totalViolations == 0 ? 0 : 1;
}

}  // namespace

json RunConfig::echo() const {
  json j{{"command", command}, {"seed", seed},           {"eps", eps},
         {"trials", trials},   {"format", format},       {"jobs", jobs},
         {"schedule", schedule}, {"deterministic", deterministic}};
  if (!sub.empty()) j["sub"] = sub;
  if (!inPath.empty()) j["in"] = inPath;
  if (!genSpec.empty()) j["gen"] = genSpec;
  if (k > 0) j["k"] = k;
  if (!epsList.empty()) j["epsList"] = epsList;
  if (!alpha.empty()) j["alpha"] = alpha;
  if (!kList.empty()) j["kList"] = kList;
  if (!etaList.empty()) j["etaList"] = etaList;
  if (command == "experiment" && (sub == "coeffdev" || sub == "momentdev")) j["eta"] = eta;
  if (command == "experiment" && sub == "power") j["tester"] = tester;
  if (command == "verify") j["nMax"] = nMax;
  if (command == "gen") j["sparse"] = sparse;
  return j;
}

int runMain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!cfg.outPath.empty()) {
      file.open(cfg.outPath);
      if (!file) throw std::invalid_argument("cannot open --out file \"" + cfg.outPath + "\"");
      sink = &file;
    }
    if (cfg.format != "json" && cfg.format != "csv") {
      throw std::invalid_argument("--format must be json or csv");
    }

    if (cfg.command == "gen") return cmdGen(cfg, *sink);
    if (cfg.command == "check") return cmdCheck(cfg, *sink);
    if (cfg.command == "distance") return cmdDistance(cfg, *sink);
    if (cfg.command == "bipdist") return cmdBipdist(cfg, *sink);
    if (cfg.command == "spectrum") return cmdSpectrum(cfg, *sink);
    if (cfg.command == "estimate-distance" || cfg.command == "estimate-minfourier" ||
        cfg.command == "estimate-linearity") {
      return cmdEstimate(cfg, *sink);
    }
    if (cfg.command == "test") return cmdTest(cfg, *sink);
    if (cfg.command == "experiment") return cmdExperiment(cfg, *sink);
    if (cfg.command == "verify") return cmdVerify(cfg, *sink);
    throw std::invalid_argument("unknown command \"" + cfg.command + "\"");
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

std::string runToString(const RunConfig& cfg, int* exitCode) {
  std::ostringstream out, err;
  int code = runMain(cfg, out, err);
  if (exitCode) *exitCode = code;
  return out.str();
}

}  // namespace ocf
