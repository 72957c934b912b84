#include "tailcr/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace tailcr {

Level::Level(double a) : alpha(a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::domain_error("confidence level must lie strictly inside (0,1)");
  }
}

double normal_pdf(double x) {
  constexpr double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) {
  constexpr double inv_sqrt2 = 0.7071067811865476;
  return 0.5 * std::erfc(-x * inv_sqrt2);
}

namespace {

// Rational approximation for the probit (Acklam's coefficients), |error|
// around 1e-9; the Halley polish below pushes it to machine accuracy.
double probit_estimate(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile requires 0 < p < 1");
  }
  double x = probit_estimate(p);
  // One Halley step against the erfc-based CDF.
  const double err = normal_cdf(x) - p;
  const double u = err / normal_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double two_sided_z(Level level) { return normal_quantile(0.5 * (1.0 + level.alpha)); }

double chi2_1_quantile(Level level) {
  const double z = two_sided_z(level);
  return z * z;
}

}  // namespace tailcr
