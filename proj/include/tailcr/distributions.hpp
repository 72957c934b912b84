#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tailcr/rng.hpp"

namespace tailcr {

enum class DistKind { burr, frechet };

// Heavy-tailed family with a closed-form CDF and upper-quantile function.
//   burr(a, b):  F(x) = 1 - (1 + x^(b-a))^(-a/(b-a)),  0 < a < b
//   frechet(a):  F(x) = exp(-x^(-a)),                  a > 0
// Both have tail exponent a: 1 - F(x) ~ x^(-a) up to a slowly varying factor.
struct HeavyDist {
  DistKind kind = DistKind::burr;
  double a = 1.0;
  double b = 2.0;  // ignored for frechet
};

HeavyDist make_burr(double a, double b);
HeavyDist make_frechet(double a);

double cdf(const HeavyDist& d, double x);

// Exact inverse of the tail: returns x with 1 - F(x) = p.
double upper_quantile(const HeavyDist& d, double p);

// Inverse-transform sampling; consumes exactly n values from the stream.
std::vector<double> sample(const HeavyDist& d, std::size_t n, UniformStream& u);

// Second-order tail description: tail exponent gamma, convergence rate rho,
// and auxiliary function A(t) = a_coef * t^a_exp. gamma uses the exponent
// convention (gamma = a for both families); the reciprocal convention is 1/a.
struct SecondOrder {
  double gamma;
  double rho;
  double a_coef;
  double a_exp;
  double A(double t) const { return a_coef * std::pow(t, a_exp); }
};

SecondOrder second_order(const HeavyDist& d);

const char* dist_name(DistKind k);

}  // namespace tailcr
