#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "tailcr/errors.hpp"

namespace tailcr {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Brent-style bracketed root search: inverse-quadratic / secant proposals with
// a bisection fallback, so the iterate never leaves the bracket. Stops when
// the bracket half-width drops below x_tol_rel * max(1, |x|) or |f| <= f_tol.
// Callers must hand in a sign change; huge or non-finite f values (infeasible
// probes encoded as +/-1e300) force bisection steps instead of interpolation.
template <class F>
RootResult bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                          double x_tol_rel, double f_tol, int max_iter = 240) {
  if (std::isnan(f_lo) || std::isnan(f_hi)) {
    throw solver_error("root search started from a NaN function value");
  }
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw no_root_error("root search bracket does not change sign", lo, hi, f_lo, f_hi);
  }

  // Classic Brent bookkeeping: b is the current best, [b, c] brackets the root.
  double a = lo, b = hi, c = hi;
  double fa = f_lo, fb = f_hi, fc = f_hi;
  double d = 0.0, e = 0.0;
  constexpr double huge = 1e100;

  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = x_tol_rel * std::max(1.0, std::fabs(b));
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0 || std::fabs(fb) <= f_tol) {
      return {b, fb, iter};
    }
    const bool can_interp = std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb) &&
                            std::fabs(fa) < huge && std::fabs(fb) < huge &&
                            std::fabs(fc) < huge;
    if (can_interp) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if (std::isnan(fb)) throw solver_error("root search hit a NaN function value");
  }
  throw solver_error("root search failed to converge within the iteration budget");
}

}  // namespace tailcr
