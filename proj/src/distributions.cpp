#include "tailcr/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace tailcr {

HeavyDist make_burr(double a, double b) {
  if (!(a > 0.0 && b > a)) {
    throw std::invalid_argument("burr requires 0 < a < b");
  }
  return {DistKind::burr, a, b};
}

HeavyDist make_frechet(double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("frechet requires a > 0");
  }
  return {DistKind::frechet, a, 0.0};
}

double cdf(const HeavyDist& d, double x) {
  if (!(x > 0.0)) return 0.0;
  if (d.kind == DistKind::burr) {
    const double s = d.b - d.a;
    return 1.0 - std::pow(1.0 + std::pow(x, s), -d.a / s);
  }
  return std::exp(-std::pow(x, -d.a));
}

double upper_quantile(const HeavyDist& d, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
  if (d.kind == DistKind::burr) {
    const double s = d.b - d.a;
    return std::pow(std::pow(p, -s / d.a) - 1.0, 1.0 / s);
  }
  // 1 - F(x) = p  =>  x = (-log(1-p))^(-1/a)
  return std::pow(-std::log1p(-p), -1.0 / d.a);
}

std::vector<double> sample(const HeavyDist& d, std::size_t n, UniformStream& u) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = upper_quantile(d, 1.0 - u.next());
  }
  return out;
}

SecondOrder second_order(const HeavyDist& d) {
  if (d.kind == DistKind::burr) {
    const double rho = -(d.b - d.a) / d.a;
    return {d.a, rho, 1.0 / d.a, rho};
  }
  return {d.a, -1.0, 1.0 / (2.0 * d.a), -1.0};
}

const char* dist_name(DistKind k) { return k == DistKind::burr ? "burr" : "frechet"; }

}  // namespace tailcr
