#include "tailcr/ci_lr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tailcr/errors.hpp"
#include "tailcr/solve.hpp"

namespace tailcr {

namespace {

constexpr double kBig = 1e300;

void check_inputs(double p, double x_p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
  if (!(x_p > 0.0) || !std::isfinite(x_p)) {
    throw std::domain_error("hypothesized quantile must be positive and finite");
  }
}

// g without feasibility exceptions: beyond a wall it returns the wall's
// limiting sign so bracket walks can stop exactly at the boundary.
double g_raw(double lam, double kk, double nn, double p, double G) {
  const double denom = 1.0 - (lam / kk) * G;
  if (!(denom > 0.0)) return G > 0.0 ? kBig : -kBig;
  if (!(lam < kk)) return kBig;
  return G / denom + std::log((nn - lam) * p / (kk - lam));
}

}  // namespace

double g_eval(const TailSample& ts, double p, double x_p, double lambda) {
  check_inputs(p, x_p);
  const double gamma = hill(ts);
  const double kk = static_cast<double>(ts.k);
  const double nn = static_cast<double>(ts.n);
  const double G = gamma * std::log(x_p / ts.threshold);
  const double denom = 1.0 - (lambda / kk) * G;
  if (!(denom > 0.0) || !(lambda < kk)) {
    throw std::domain_error("lambda violates the feasibility constraint of the constrained fit");
  }
  return G / denom + std::log((nn - lambda) * p / (kk - lambda));
}

double solve_lambda(const TailSample& ts, double p, double x_p, double bracket_scale) {
  check_inputs(p, x_p);
  if (!(bracket_scale > 0.0)) {
    throw std::invalid_argument("bracket_scale must be positive");
  }
  const double gamma = hill(ts);
  const double kk = static_cast<double>(ts.k);
  const double nn = static_cast<double>(ts.n);
  const double G = gamma * std::log(x_p / ts.threshold);

  // Feasible interval (exclusive walls): g -> +inf at the upper wall and
  // either -inf (finite lower wall) or log p < 0 (lambda -> -inf).
  const double upper = G > 0.0 ? std::min(kk, kk / G) : kk;
  const double lower =
      G < 0.0 ? kk / G : -std::numeric_limits<double>::infinity();
  auto g = [&](double lam) { return g_raw(lam, kk, nn, p, G); };

  const bool bounded_below = std::isfinite(lower);
  const double wide = std::max({2.0 * kk, 2.0 * std::fabs(upper), 2.0});

  double d = bounded_below ? 0.45 * (upper - lower) * bracket_scale : wide * bracket_scale;
  if (bounded_below) d = std::min(d, 0.95 * (upper - lower));
  double hi = 0.0, f_hi = 0.0;
  bool have = false;
  for (int j = 0; j < 1200 && !have; ++j) {
    const double cand = upper - d;
    const double val = g(cand);
    if (val > 0.0) {
      hi = cand;
      f_hi = val;
      have = true;
    } else {
      d *= 0.5;
    }
  }
  if (!have) {
    throw no_root_error("g stayed nonpositive up to the feasible upper limit", upper - d,
                        upper, g(upper - d), kBig);
  }

  double lo = 0.0, f_lo = 0.0;
  have = false;
  if (bounded_below) {
    double e = std::min(0.45 * (upper - lower) * bracket_scale, 0.95 * (upper - lower));
    for (int j = 0; j < 1200 && !have; ++j) {
      const double cand = lower + e;
      const double val = g(cand);
      if (val < 0.0) {
        lo = cand;
        f_lo = val;
        have = true;
      } else {
        e *= 0.5;
      }
    }
  } else {
    double e = wide * bracket_scale;
    for (int j = 0; j < 200 && !have; ++j) {
      const double cand = upper - e;
      const double val = g(cand);
      if (val < 0.0) {
        lo = cand;
        f_lo = val;
        have = true;
      } else {
        e *= 2.0;
      }
    }
  }
  if (!have) {
    throw no_root_error("g stayed nonnegative over the lower bracket walk", lower, hi, 0.0,
                        f_hi);
  }

  return bracketed_root(g, lo, hi, f_lo, f_hi, 1e-12, 0.0, 300).x;
}

LrSolution lr_stat(const TailSample& ts, double p, double x_p, double bracket_scale) {
  const double lam = solve_lambda(ts, p, x_p, bracket_scale);
  const double gamma = hill(ts);
  const double kk = static_cast<double>(ts.k);
  const double nn = static_cast<double>(ts.n);
  const double G = gamma * std::log(x_p / ts.threshold);

  const double q = (lam / kk) * G;
  const double om = 1.0 - q;  // gamma_hat / gamma_bar
  if (!(om > 0.0) || !(lam < kk)) {
    throw solver_error("constrained fit left the feasible set");
  }
  // -2k(log(gamma_bar/gamma_hat) - (gamma_bar/gamma_hat - 1)) expressed
  // through q keeps the value exact near q = 0.
  double stat = -2.0 * kk * (-std::log1p(-q) - q / om) - 2.0 * kk * std::log1p(-lam / kk) +
                2.0 * nn * std::log1p(-lam / nn);
  if (stat < -1e-9) {
    throw solver_error("likelihood ratio statistic fell below the negative tolerance floor");
  }
  stat = std::max(stat, 0.0);

  LrSolution s;
  s.lambda = lam;
  s.gamma_bar = gamma / om;
  s.c_bar = std::pow(ts.threshold, s.gamma_bar) * (kk - lam) / (nn - lam);
  s.stat = stat;
  s.g_residual = std::fabs(g_raw(lam, kk, nn, p, G));
  return s;
}

Region lr_region(const TailSample& ts, double p, Level level, RegionMode mode) {
  const double u = chi2_1_quantile(level);
  const double gamma = hill(ts);
  const double x_hat = weissman_quantile(ts, p);
  const double kk = static_cast<double>(ts.k);
  const double log_ratio = std::log(kk / (static_cast<double>(ts.n) * p));
  const double hint =
      two_sided_z(level) * std::max(std::fabs(log_ratio), 1e-3) / (gamma * std::sqrt(kk));
  auto fn = [&](double x) -> StatProbe { return {lr_stat(ts, p, x).stat, true}; };
  return scan_region(fn, x_hat, u, level, Method::lr, mode, hint);
}

}  // namespace tailcr
