#include "tailcr/ci_normal.hpp"

#include <cmath>
#include <stdexcept>

namespace tailcr {

Region normal_region(const TailSample& ts, double p, Level level) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
  const double gamma = hill(ts);
  const double x_hat = weissman_quantile(ts, p);
  const double k = static_cast<double>(ts.k);
  const double log_ratio = std::log(k / (static_cast<double>(ts.n) * p));

  Region r;
  r.level = level;
  r.method = Method::normal;
  if (!(log_ratio > 0.0)) r.extrapolation_warning = true;
  const double w = two_sided_z(level) * log_ratio / (gamma * std::sqrt(k));
  r.lo = x_hat * std::exp(-w);
  r.hi = x_hat * std::exp(w);
  return r;
}

double predicted_coverage(std::size_t k, std::size_t n, double p, Level level) {
  const double z = two_sided_z(level);
  const double log_ratio =
      std::log(static_cast<double>(k) / (static_cast<double>(n) * p));
  return level.alpha - z * normal_pdf(z) / (log_ratio * log_ratio);
}

double cdf_expansion(double x, std::size_t k, std::size_t n, double p, double gamma,
                     double rho, double a_value) {
  const double kk = static_cast<double>(k);
  const double sqrt_k = std::sqrt(kk);
  const double log_ratio = std::log(kk / (static_cast<double>(n) * p));
  const double pdf = normal_pdf(x);
  return normal_cdf(x) + pdf * (1.0 + 2.0 * x * x) / (3.0 * sqrt_k) -
         pdf * (gamma / (1.0 - rho)) * sqrt_k * a_value -
         0.5 * x * pdf / (log_ratio * log_ratio);
}

}  // namespace tailcr
