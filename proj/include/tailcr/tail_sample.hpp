#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tailcr {

// The k largest observations viewed on the log scale. threshold is the
// (k+1)-th largest value; z[i] = log(x_(i)/threshold) for the i-th largest,
// so z is nonincreasing and ends at z[k-1] >= 0. Treat as immutable once
// built.
struct TailSample {
  std::size_t n = 0;
  std::size_t k = 0;
  double threshold = 0.0;
  std::vector<double> z;
  double z_sum = 0.0;
};

// Sorts a copy of data (descending) and builds the tail view. Requires
// 1 <= k <= n-1 and a strictly positive threshold.
TailSample make_tail_sample(std::span<const double> data, std::size_t k);

// Same, assuming data is already sorted in nonincreasing order (only the
// first k+1 entries are inspected; their order is verified).
TailSample make_tail_sample_sorted(std::span<const double> sorted_desc, std::size_t k);

// Reciprocal mean of the log spacings. Throws estimation_error when every
// spacing is zero (all top k+1 observations tied).
double hill(const TailSample& ts);

// Scale estimate (k/n) * threshold^gamma_hat paired with the tail model
// 1 - F(x) = c * x^(-gamma).
double c_hat(const TailSample& ts);

// Point estimate of the upper p quantile: threshold * (k/(n p))^(1/gamma_hat).
double weissman_quantile(const TailSample& ts, double p);

// Log likelihood of (gamma, c) under the tail model with the n-k observations
// below the threshold treated as censored. Requires 0 < c*threshold^-gamma < 1.
double censored_loglik(const TailSample& ts, double gamma, double c);

struct TailFit {
  double gamma_hat;
  double c_hat;
  double x_hat;
  double p;
};

TailFit fit_tail(const TailSample& ts, double p);

}  // namespace tailcr
