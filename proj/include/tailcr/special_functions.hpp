#pragma once

namespace tailcr {

// Confidence level, validated to lie strictly inside (0,1).
struct Level {
  explicit Level(double a);
  double alpha;
};

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse standard normal CDF. Rational initial estimate polished with a
// Halley step against the erfc-based CDF; absolute error below 1e-10
// everywhere in (0,1). Throws std::domain_error outside.
double normal_quantile(double p);

// Symmetric two-sided critical value: the z with P(|N(0,1)| <= z) = alpha.
double two_sided_z(Level level);

// Upper alpha quantile of the chi-square distribution with one degree of
// freedom; equals two_sided_z(alpha) squared.
double chi2_1_quantile(Level level);

}  // namespace tailcr
