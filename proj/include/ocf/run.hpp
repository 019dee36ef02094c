#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ocf {

// Parsed CLI invocation. The CLI front end only fills this in; all execution
// lives behind runMain so tests can run commands in-process and compare
// outputs byte for byte.
struct RunConfig {
  std::string command;  // check distance estimate-distance estimate-minfourier
                        // estimate-linearity test spectrum bipdist experiment
                        // gen verify
  std::string sub;      // test: edge|subspace; experiment: coeffdev|momentdev|power

  std::string inPath;   // --in: function file
  std::string genSpec;  // --gen: kind:key=value,... instance description

  double eps = 0.125;
  std::vector<double> epsList;  // experiment power
  std::uint64_t seed = 1;
  int k = 0;                    // sample-size override (0 = schedule default)
  std::string schedule = "practical";  // or "paper"
  std::uint64_t trials = 1;
  std::string outPath;          // empty = stdout
  std::string format = "json";  // or "csv"
  int jobs = 1;
  bool deterministic = false;   // suppress the timestamp field
  bool sparse = false;          // gen: emit sparse file format
  std::string alpha;            // binary string, coefficient experiments
  std::vector<int> kList;       // experiment grids
  std::vector<double> etaList;
  double eta = 0.1;             // deviation experiments
  std::string tester = "edge";  // experiment power: edge|subspace
  int nMax = 4;                 // verify: largest dimension swept

  nlohmann::json echo() const;
};

// Executes one invocation, writing the primary output to out and diagnostics
// to err. Returns the process exit code: 0 success, 1 = verify found a
// property violation, 2 = usage or input error.
int runMain(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Renders cfg's output into a string (stdout side only); helper for tests.
std::string runToString(const RunConfig& cfg, int* exitCode = nullptr);

}  // namespace ocf
