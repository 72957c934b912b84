#pragma once

#include "tailcr/region.hpp"
#include "tailcr/tail_sample.hpp"

namespace tailcr {

// Likelihood-ratio machinery for a hypothesized upper-p quantile x_p.
// The constrained maximum of the censored likelihood reduces to a single
// multiplier lambda; gamma_bar and c_bar are the constrained estimates.
struct LrSolution {
  double lambda;
  double gamma_bar;
  double c_bar;
  double stat;        // -2 log likelihood ratio, clamped at 0 from below
  double g_residual;  // |g(lambda)| at the accepted root
};

// Monotone root function for the constrained fit. Requires lambda feasible:
// 1 - (lambda/k) * gamma_hat * log(x_p/threshold) > 0 and lambda < k; throws
// std::domain_error otherwise.
double g_eval(const TailSample& ts, double p, double x_p, double lambda);

// Root of g over the feasible interval, found by a doubling bracket walk and
// a bracketed search to relative tolerance 1e-12 in lambda. bracket_scale
// rescales the initial bracket only (the root must not depend on it).
double solve_lambda(const TailSample& ts, double p, double x_p, double bracket_scale = 1.0);

LrSolution lr_stat(const TailSample& ts, double p, double x_p, double bracket_scale = 1.0);

// Confidence region {x_p : stat <= chi2_1_quantile(level)}.
Region lr_region(const TailSample& ts, double p, Level level, RegionMode mode = {});

}  // namespace tailcr
