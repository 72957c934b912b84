#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tailcr/region.hpp"
#include "tailcr/tail_sample.hpp"

namespace tailcr {

// Reweighting of the sample produced by the tilting solver. The k largest
// observations carry individual weights (ordered like TailSample::z); each of
// the remaining n-k observations carries the same censored weight.
struct TiltWeights {
  std::vector<double> exceed;
  double censored = 0.0;
};

// Flattens structured weights into a full length-n vector (exceedance weights
// first, then n-k copies of the censored weight).
std::vector<double> full_weights(const TiltWeights& w, std::size_t n);

// Divergence of a probability vector q from the uniform weights 1/n:
//   rho0 not in {0,1}: (rho0(1-rho0))^-1 (1 - n^-1 sum (n q_i)^rho0)
//   rho0 = 0:          -n^-1 sum log(n q_i)
//   rho0 = 1:          sum q_i log(n q_i)  (0 log 0 = 0)
// q must be entrywise nonnegative and sum to 1.
double tilt_distance(std::span<const double> q, double rho0);
double tilt_distance(const TiltWeights& w, std::size_t n, double rho0);

// Tail fit under reweighted data: gamma(q) = S / sum_exceed q_i z_i with
// S = sum_exceed q_i, and c(q) = threshold^gamma(q) * S.
struct TiltedFit {
  double gamma;
  double c;
};
TiltedFit tilted_fit(const TiltWeights& w, const TailSample& ts);
TiltedFit tilted_fit(std::span<const double> q, const TailSample& ts);

// Exponentially tilted mean of the spacings:
//   sum z_i exp(-lambda z_i) / sum exp(-lambda z_i),
// strictly decreasing in lambda with limits z_max and z_min. Evaluated with a
// max-shift so large multipliers cannot overflow.
double tilted_spacing_mean(std::span<const double> z, double lambda);

// Closed-form weights for a given multiplier pair. The mass-balance fraction
// and the constraint scale are rebuilt from lambda1 and the problem data.
TiltWeights weights_from_multipliers(double lambda1, double lambda2,
                                     const TailSample& ts, double p, double x_p);

// Inner stage at fixed lambda1: matches the tilted spacing mean to the target
// t = log(x_p/threshold) / log(A1/p) and maps the tilt back to lambda2.
// Throws infeasible_target_error when t falls outside (z_min, z_max).
struct InnerSolution {
  double lambda_hat;
  double lambda2;
  double target;
};
InnerSolution inner_solve(const TailSample& ts, double p, double x_p, double lambda1);

// Full tilting statistic at a hypothesized quantile: outer search for lambda1
// on the mass-balance equation, inner tilt for lambda2, weight assembly, and
// the divergence statistic 2 n D_1(q).
struct TiltSolution {
  double lambda1;
  double lambda2;
  double lambda_hat;
  TiltWeights weights;
  double stat;
  double mass_residual;        // |sum q - 1|
  double constraint_residual;  // |gamma(q) log(x_p/threshold) - log(S/p)|
};
TiltSolution tilt_stat(const TailSample& ts, double p, double x_p);

// Confidence region {x_p : stat <= chi2_1_quantile(level)}. Probe points
// whose tilt is infeasible or unsolvable are treated as lying outside the
// region and counted in the diagnostics.
Region tilt_region(const TailSample& ts, double p, Level level, RegionMode mode = {});

}  // namespace tailcr
