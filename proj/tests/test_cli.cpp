#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ocf/function_io.hpp"
#include "ocf/generators.hpp"
#include "ocf/run.hpp"

#include <json.hpp>

using namespace ocf;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/ocf_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string slurp() const {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen writes a parseable function file") {
  TempFile tf("gen.fn");
  RunConfig cfg;
  cfg.command = "gen";
  cfg.genSpec = "hyperplaneSide:n=6,alpha=000101,side=1";
  cfg.outPath = tf.path;
  int code = 0;
  runToString(cfg, &code);
  CHECK(code == 0);
  BooleanFunction f = parseFunction(tf.slurp());
  CHECK(f == genHyperplaneSide(6, 0b000101, 1));

  cfg.sparse = true;
  runToString(cfg, &code);
  CHECK(code == 0);
  CHECK(tf.slurp().find("support:") != std::string::npos);
  CHECK(parseFunction(tf.slurp()) == f);
}

TEST_CASE("gen spec errors exit with the usage code") {
  for (const char* bad :
       {"unknownKind:n=4", "hyperplaneSide:n=4", "hyperplaneSide:n=4,alpha=0000,side=1",
        "randomDensity:n=4,p=2.0", "allOnes:n=0", "allOnes:n=25", "allOnes:m=4",
        "allOnes", "", "randomDensity:n=4,p=0.5,seed=3"}) {
    RunConfig cfg;
    cfg.command = "gen";
    cfg.genSpec = bad;
    int code = 0;
    runToString(cfg, &code);
    CHECK(code == 2);
  }
}

TEST_CASE("check reports decisions and witnesses") {
  RunConfig cfg;
  cfg.command = "check";
  cfg.genSpec = "allNonzero:n=2";
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["isOcf"] == false);
  REQUIRE(out.contains("witness"));
  CHECK(out["witness"]["k"] == 3);
  CHECK(out["witness"]["points"].size() == 3);

  cfg.genSpec = "hyperplaneSide:n=5,alpha=00011,side=1";
  out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["isOcf"] == true);
  CHECK(out["alpha"] == "00011");
  CHECK_FALSE(out.contains("witness"));
}

TEST_CASE("check reads function files") {
  TempFile tf("check.fn");
  {
    std::ofstream fout(tf.path);
    fout << serializeDense(genAllNonzero(2));
  }
  RunConfig cfg;
  cfg.command = "check";
  cfg.inPath = tf.path;
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["isOcf"] == false);

  cfg.inPath = "/tmp/ocf_test_does_not_exist.fn";
  runToString(cfg, &code);
  CHECK(code == 2);
}

TEST_CASE("distance output carries the exact dyadic") {
  RunConfig cfg;
  cfg.command = "distance";
  cfg.genSpec = "allNonzero:n=2";
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["distance"]["numerator"] == "1");
  CHECK(out["distance"]["log2Denominator"] == 2);
  CHECK(out["distance"]["value"] == doctest::Approx(0.25));
  CHECK(out["minW"] == -1);
  CHECK(out["argMinW"] == "01");
  CHECK(out["density"] == doctest::Approx(0.75));
}

TEST_CASE("bipartiteness distance output states the exact halving") {
  RunConfig cfg;
  cfg.command = "bipdist";
  cfg.genSpec = "allOnes:n=3";
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["bipartitenessDistance"]["value"] == doctest::Approx(0.25));
  CHECK(out["ocfDistance"]["value"] == doctest::Approx(0.5));
  CHECK(out["halfRelationExact"] == true);

  cfg.genSpec = "allOnes:n=5";  // brute force capped at n = 4
  runToString(cfg, &code);
  CHECK(code == 2);
}

TEST_CASE("spectrum output in both formats") {
  RunConfig cfg;
  cfg.command = "spectrum";
  cfg.genSpec = "allNonzero:n=2";
  cfg.deterministic = true;
  cfg.format = "csv";
  int code = 0;
  std::string csv = runToString(cfg, &code);
  CHECK(code == 0);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "alpha,w");
  std::string first;
  std::getline(lines, first);
  CHECK(first == "00,3");

  cfg.format = "json";
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["w"] == json::array({3, -1, -1, -1}));
  CHECK(out["supportSize"] == 3);
}

TEST_CASE("estimator commands emit their configuration") {
  RunConfig cfg;
  cfg.command = "estimate-distance";
  cfg.genSpec = "randomDensity:n=12,p=0.5";
  cfg.eps = 0.25;
  cfg.seed = 9;
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["estimate"]["quantity"] == "ocfDistance");
  CHECK(out["estimate"]["eps"] == 0.25);
  CHECK(out["estimate"]["seed"] == 9);
  CHECK(out["estimate"]["value"].is_number());
  CHECK(out["config"]["command"] == "estimate-distance");
  CHECK_FALSE(out.contains("timestamp"));

  cfg.deterministic = false;
  out = json::parse(runToString(cfg, &code));
  CHECK(out.contains("timestamp"));

  cfg.command = "estimate-minfourier";
  cfg.deterministic = true;
  out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["estimate"]["quantity"] == "minFourierCoefficient");

  cfg.command = "estimate-linearity";
  out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["estimate"]["quantity"] == "linearityDistance");
}

TEST_CASE("test command aggregates trials") {
  RunConfig cfg;
  cfg.command = "test";
  cfg.sub = "edge";
  cfg.genSpec = "allOnes:n=8";
  cfg.eps = 0.125;
  cfg.trials = 10;
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["trials"] == 10);
  CHECK(out["rejectRate"] == 1.0);
  CHECK(out["firstReject"]["witness"]["points"].is_array());

  cfg.trials = 1;
  out = json::parse(runToString(cfg, &code));
  CHECK(out["report"]["accepted"] == false);
  CHECK(out["report"]["witness"]["points"].is_array());
  CHECK(out["report"]["k"] == 384);

  cfg.sub = "subspace";
  cfg.schedule = "paper";  // refused at the default budget
  runToString(cfg, &code);
  CHECK(code == 2);
}

TEST_CASE("deterministic outputs are byte-identical across runs and jobs") {
  RunConfig cfg;
  cfg.command = "experiment";
  cfg.sub = "coeffdev";
  cfg.genSpec = "randomDensity:n=10,p=0.5";
  cfg.alpha = "0000000111";
  cfg.kList = {5, 7};
  cfg.etaList = {0.1};
  cfg.trials = 200;
  cfg.seed = 21;
  cfg.deterministic = true;
  cfg.format = "csv";
  int c1 = 0, c2 = 0;
  std::string a = runToString(cfg, &c1);
  cfg.jobs = 4;
  std::string b = runToString(cfg, &c2);
  CHECK(c1 == 0);
  CHECK(c2 == 0);
  CHECK(a == b);
  CHECK(a.find("satisfied") != std::string::npos);

  RunConfig tcfg;
  tcfg.command = "test";
  tcfg.sub = "subspace";
  tcfg.genSpec = "hyperplaneSide:n=10,alpha=0000000011,side=1";
  tcfg.trials = 5;
  tcfg.deterministic = true;
  std::string t1 = runToString(tcfg, &c1);
  std::string t2 = runToString(tcfg, &c2);
  CHECK(t1 == t2);
}

TEST_CASE("verify exits cleanly on the built-in sweep") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.nMax = 4;
  cfg.trials = 30;
  cfg.deterministic = true;
  int code = 0;
  json out = json::parse(runToString(cfg, &code));
  CHECK(code == 0);
  CHECK(out["totalViolations"] == 0);
  REQUIRE(out["sweeps"].is_array());
  bool sawTransformRow = false;
  for (const auto& row : out["sweeps"]) {
    CHECK(row["violations"] == 0);
    if (row["mode"] == "transform-agreement") sawTransformRow = true;
  }
  CHECK(sawTransformRow);
}

TEST_CASE("power experiment emits csv rows per eps") {
  RunConfig cfg;
  cfg.command = "experiment";
  cfg.sub = "power";
  cfg.genSpec = "allOnes:n=8";
  cfg.epsList = {0.25, 0.125};
  cfg.tester = "edge";
  cfg.trials = 10;
  cfg.deterministic = true;
  cfg.format = "csv";
  int code = 0;
  std::string csv = runToString(cfg, &code);
  CHECK(code == 0);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header.find("family") == 0);
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("unknown commands and bad values exit with the usage code") {
  RunConfig cfg;
  cfg.command = "frobnicate";
  int code = 0;
  runToString(cfg, &code);
  CHECK(code == 2);

  cfg.command = "estimate-distance";
  cfg.genSpec = "allOnes:n=4";
  cfg.eps = 0.0;
  runToString(cfg, &code);
  CHECK(code == 2);

  cfg.command = "experiment";
  cfg.sub = "coeffdev";
  cfg.genSpec = "allOnes:n=4";
  cfg.eps = 0.125;
  cfg.alpha = "";  // required for coefficient experiments
  runToString(cfg, &code);
  CHECK(code == 2);

  cfg.alpha = "11";  // wrong length for n = 4
  runToString(cfg, &code);
  CHECK(code == 2);
}

}  // TEST_SUITE
