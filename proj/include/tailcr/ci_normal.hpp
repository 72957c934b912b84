#pragma once

#include <cstddef>

#include "tailcr/region.hpp"
#include "tailcr/tail_sample.hpp"

namespace tailcr {

// Symmetric-on-the-log-scale interval around the quantile point estimate:
//   x_hat * exp(-+ z * log(k/(n p)) / (gamma_hat * sqrt(k))).
// When k/(n p) <= 1 the formula value is still returned, with the
// extrapolation_warning diagnostic set.
Region normal_region(const TailSample& ts, double p, Level level);

// First-order coverage prediction for the interval above:
//   alpha - z * phi(z) / log(k/(n p))^2.
double predicted_coverage(std::size_t k, std::size_t n, double p, Level level);

// Edgeworth-style approximation to the sampling CDF of the standardized
// log-quantile error sqrt(k) * gamma_hat * log(x_hat_p / x_p) / log(k/(n p))
// at argument x. gamma follows whichever tail-index convention the caller
// adopts; a_value is the auxiliary function evaluated at n/k. Sharp when
// sqrt(k) * a_value is small; for larger values the neglected second-order
// remainder is comparable to the a_value term itself.
double cdf_expansion(double x, std::size_t k, std::size_t n, double p,
                     double gamma, double rho, double a_value);

}  // namespace tailcr
