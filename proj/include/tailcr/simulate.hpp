#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tailcr/ci_lr.hpp"
#include "tailcr/ci_normal.hpp"
#include "tailcr/ci_tilt.hpp"
#include "tailcr/distributions.hpp"
#include "tailcr/region.hpp"

namespace tailcr {

struct ExperimentConfig {
  HeavyDist dist;
  std::size_t n = 1000;
  std::size_t reps = 2000;
  double p = 0.01;
  std::vector<std::size_t> k_grid;
  std::vector<Method> methods;
  Level level{0.9};
  std::uint64_t seed = 1;
  RegionMode region_mode{};
};

struct MetricRow {
  std::size_t k;
  Method method;
  std::string metric;
  double value;
  double se;
  std::size_t failures;
};

struct ExperimentTable {
  ExperimentConfig config;
  std::vector<MetricRow> rows;
};

// Empirical coverage of the true quantile, judged directly by the statistic
// (membership test), not by constructing region endpoints. Per-replicate
// solver failures count as non-coverage and are tallied in the failure
// column. Results are independent of the worker count.
ExperimentTable run_coverage(const ExperimentConfig& cfg);

// Mean region length per (k, method); failed region builds are excluded from
// the mean and tallied.
ExperimentTable run_length(const ExperimentConfig& cfg);

// Statistic profiles along a grid of hypothesized quantiles. Offsets are
// added to `center` (default: the quantile point estimate); infeasible points
// are kept and flagged rather than dropped.
struct ProfilePoint {
  double x_p;
  Method method;
  bool feasible;
  double stat;
};
std::vector<ProfilePoint> profile_curve(std::span<const double> data, double p,
                                        std::size_t k, std::span<const double> offsets,
                                        std::optional<double> center = {});

// Regions across a grid of k values on a fixed dataset. Failures are marked
// per cell, never fatal.
struct ScanRow {
  std::size_t k;
  Method method;
  bool ok;
  double lo;
  double hi;
  double x_hat;
  double gamma_hat;
  std::string note;
};
std::vector<ScanRow> kscan(std::span<const double> data, double p, Level level,
                           std::span<const std::size_t> k_grid,
                           std::span<const Method> methods, RegionMode mode = {});

// Worker cap: TAILCR_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
std::size_t worker_count();

// Runs body(0..count-1) across workers. Any exception is rethrown after all
// workers finish. Work items must not depend on execution order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tailcr
