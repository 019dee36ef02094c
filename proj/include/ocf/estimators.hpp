#pragma once

#include <cstdint>
#include <string>

#include "ocf/boolean_function.hpp"

#include <json.hpp>

namespace ocf {

struct Estimate {
  std::string quantity;
  double value = 0.0;
  double eps = 0.0;        // target error
  std::uint64_t seed = 0;
  int t = 0;               // vertex-sample size, when applicable
  std::uint64_t m = 0;     // probe count parameter, when applicable
  std::uint64_t queries = 0;
  bool clamped = false;    // sampling noise exited the feasible range
  std::string note;

  nlohmann::json toJson() const;
};

// Mean of m = ceil(3 / eps^2) uniform probes (override recorded when used).
Estimate estimateDensity(const BooleanFunction& f, double eps, std::uint64_t seed,
                         std::uint64_t mOverride = 0);

// Distance to OCF, estimated as twice the bipartiteness distance of an
// induced vertex sample of the function's graph: t = min(24, ceil(8/eps))
// vertices, brute-force minimum violation fraction over the 2^(t-1)
// bipartitions (vertex 0 pinned), violations normalized by t^2 with loops
// charged half. The brute-force minimum over-fits sparse samples low, so the
// raw value is debiased against resampled null graphs of the same edge
// density before doubling (see the implementation for the calibration).
// Clamped to [0, 1/2]. tOverride substitutes t when >= 2.
Estimate estimateOcfDistance(const BooleanFunction& f, double eps, std::uint64_t seed,
                             int tOverride = 0);

// min_alpha coeff(alpha) = 2 * distanceToOcf - density, each component
// estimated at eps/3. Clamped to [-1/2, 1].
Estimate estimateMinFourier(const BooleanFunction& f, double eps, std::uint64_t seed);

// Distance to the nearest linear function, via the exact identity
// min(rho, 1/2 + min_alpha coeff): both branches estimated at eps/2.
// Clamped to [0, 1].
Estimate estimateLinearityDistance(const BooleanFunction& f, double eps, std::uint64_t seed);

}  // namespace ocf
