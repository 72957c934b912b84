#pragma once

#include <array>
#include <functional>
#include <string_view>

#include "tailcr/special_functions.hpp"

namespace tailcr {

enum class Method { normal, lr, tilt };

const char* method_name(Method m);
Method method_from_name(std::string_view s);

// How interval endpoints are located once a statistic is available.
//   bisect: per-side doubling search in log x_p, then a bracketed search that
//           narrows the threshold crossing to a tiny relative width; the
//           leftover stat - u at each endpoint is recorded.
//   step:   fixed additive steps away from the point estimate; an endpoint is
//           the first probe whose statistic exceeds u.
struct RegionMode {
  enum class Kind { bisect, step };
  Kind kind = Kind::bisect;
  double step = 0.1;
};

struct Region {
  double lo = 0.0;
  double hi = 0.0;
  Level level{0.9};
  Method method = Method::normal;
  // statistic(endpoint) - u at the two endpoints (0 for the normal method).
  std::array<double, 2> endpoint_residuals{0.0, 0.0};

  // Diagnostics.
  bool extrapolation_warning = false;  // k/(n p) <= 1: no extrapolation margin
  int infeasible_probes = 0;           // probes treated as lying outside
  bool rescanned = false;              // interior check failed; step scan used
};

// A statistic evaluation during a region scan. Infeasible probes count as
// lying outside the region.
struct StatProbe {
  double value = 0.0;
  bool feasible = true;
};

// Shared endpoint scan for statistic-based regions: the region is
// {x : stat(x) <= u} around x_hat. log_halfwidth_hint sets the initial probe
// distance on the log scale. After a bisect-mode scan the statistic is checked
// at 32 interior points; a value above u there triggers a step-mode rescan
// (flagged in the result).
Region scan_region(const std::function<StatProbe(double)>& stat_fn, double x_hat,
                   double u, Level level, Method method, RegionMode mode,
                   double log_halfwidth_hint);

}  // namespace tailcr
