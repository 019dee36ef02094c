// Command-line front end; all execution lives in the library's runMain.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ocf/run.hpp"

namespace {

void addCommonFlags(CLI::App* app, ocf::RunConfig& cfg, bool needsInput) {
  if (needsInput) {
    app->add_option("--in", cfg.inPath, "function file (dense or sparse format)");
    app->add_option("--gen", cfg.genSpec,
                    "instance spec kind:key=value,... ; kinds: zero, allOnes, allNonzero, "
                    "hyperplaneSide (n, alpha, side), randomDensity (n, p), "
                    "hyperplaneMinusNoise (n, alpha, delta), uniform (n)");
  }
  app->add_option("--seed", cfg.seed, "random seed");
  app->add_option("--out", cfg.outPath, "write output to a file instead of stdout");
  app->add_option("--format", cfg.format, "json or csv");
  app->add_option("--jobs", cfg.jobs, "worker threads (results are independent of this)");
  app->add_flag("--deterministic", cfg.deterministic, "suppress the timestamp field");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and sampling-based analysis of odd-cycle-freeness over F2^n"};
  app.require_subcommand(1);
  ocf::RunConfig cfg;

  auto* check = app.add_subcommand("check", "decide odd-cycle-freeness exactly");
  addCommonFlags(check, cfg, true);

  auto* distance = app.add_subcommand("distance", "exact distance to odd-cycle-freeness");
  addCommonFlags(distance, cfg, true);

  auto* estDist = app.add_subcommand("estimate-distance", "sampling distance estimate");
  addCommonFlags(estDist, cfg, true);
  estDist->add_option("--eps", cfg.eps, "target error");
  estDist->add_option("--k", cfg.k, "override the vertex-sample size t");

  auto* estMin = app.add_subcommand("estimate-minfourier",
                                    "sampling estimate of the smallest coefficient");
  addCommonFlags(estMin, cfg, true);
  estMin->add_option("--eps", cfg.eps, "target error");

  auto* estLin = app.add_subcommand("estimate-linearity", "sampling linearity-distance estimate");
  addCommonFlags(estLin, cfg, true);
  estLin->add_option("--eps", cfg.eps, "target error");

  auto* test = app.add_subcommand("test", "one-sided property tests");
  test->require_subcommand(1);
  auto* testEdge = test->add_subcommand("edge", "edge-sampling test");
  auto* testSub = test->add_subcommand("subspace", "subspace-restriction test");
  for (CLI::App* t : {testEdge, testSub}) {
    addCommonFlags(t, cfg, true);
    t->add_option("--eps", cfg.eps, "distance parameter");
    t->add_option("--k", cfg.k, "override the schedule's sample size");
    t->add_option("--trials", cfg.trials, "repeat with derived seeds and aggregate");
    t->add_option("--schedule", cfg.schedule, "paper or practical (subspace test)");
  }

  auto* spectrum = app.add_subcommand("spectrum", "integer-scaled coefficient table");
  addCommonFlags(spectrum, cfg, true);

  auto* bipdist = app.add_subcommand("bipdist", "exact bipartiteness distance (n <= 4)");
  addCommonFlags(bipdist, cfg, true);

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo validation runs");
  experiment->require_subcommand(1);
  auto* coeffdev = experiment->add_subcommand("coeffdev", "restricted-coefficient deviation");
  auto* momentdev = experiment->add_subcommand("momentdev", "fourth-moment deviation");
  for (CLI::App* e : {coeffdev, momentdev}) {
    addCommonFlags(e, cfg, true);
    e->add_option("--k", cfg.kList, "generator counts")->delimiter(',');
    e->add_option("--eta", cfg.etaList, "additive deviation margins")->delimiter(',');
    e->add_option("--trials", cfg.trials, "trials per cell");
  }
  coeffdev->add_option("--alpha", cfg.alpha, "direction as a binary string");
  auto* power = experiment->add_subcommand("power", "reject-rate curve over eps");
  addCommonFlags(power, cfg, true);
  power->add_option("--eps", cfg.epsList, "eps values")->delimiter(',');
  power->add_option("--tester", cfg.tester, "edge or subspace");
  power->add_option("--trials", cfg.trials, "trials per eps");

  auto* gen = app.add_subcommand("gen", "write a generated instance file");
  addCommonFlags(gen, cfg, true);
  gen->add_flag("--sparse", cfg.sparse, "emit the sparse file format");

  auto* verify = app.add_subcommand("verify", "oracle-equivalence sweeps");
  addCommonFlags(verify, cfg, false);
  verify->add_option("--n-max", cfg.nMax, "largest dimension swept");
  verify->add_option("--trials", cfg.trials, "random functions per dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sc : app.get_subcommands()) {
    cfg.command = sc->get_name();
    for (CLI::App* inner : sc->get_subcommands()) cfg.sub = inner->get_name();
  }
  return ocf::runMain(cfg, std::cout, std::cerr);
}
