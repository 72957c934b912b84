#include "tailcr/ci_tilt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tailcr/errors.hpp"
#include "tailcr/solve.hpp"

namespace tailcr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_inputs(double p, double x_p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
  if (!(x_p > 0.0) || !std::isfinite(x_p)) {
    throw std::domain_error("hypothesized quantile must be positive and finite");
  }
}

// Root of the strictly decreasing spacing-mean curve at a target strictly
// inside (z_min, z_max). The doubling walk saturates at the extremes of the
// curve, so a sign failure can only mean the target is pinned against an
// endpoint beyond double precision.
double solve_inner_lambda(std::span<const double> z, double t, double z_min, double z_max) {
  auto g = [&](double lam) { return tilted_spacing_mean(z, lam) - t; };
  double lo = -1.0, f_lo = g(lo);
  for (int j = 0; j < 60 && f_lo < 0.0; ++j) {
    lo *= 2.0;
    f_lo = g(lo);
  }
  if (f_lo < 0.0) {
    throw infeasible_target_error("spacing-mean target pinned against its upper limit", t,
                                  z_min, z_max);
  }
  double hi = 1.0, f_hi = g(hi);
  for (int j = 0; j < 60 && f_hi > 0.0; ++j) {
    hi *= 2.0;
    f_hi = g(hi);
  }
  if (f_hi > 0.0) {
    throw infeasible_target_error("spacing-mean target pinned against its lower limit", t,
                                  z_min, z_max);
  }
  return bracketed_root(g, lo, hi, f_lo, f_hi, 1e-13, 0.0, 400).x;
}

// Shared state for one hypothesized-quantile problem.
struct TiltProblem {
  const TailSample* ts;
  double p;
  double L;  // log(x_p / threshold), > 0 on the feasible side
  double nn, kk;
  double z_min, z_max;
  double a_floor;  // exceedance mass must exceed this for the target to stay below z_max
  double a_ceil;   // ... and stay below this to keep the target above z_min (inf if z_min <= 0)
};

double mass_fraction(const TiltProblem& pr, double b) {
  return 1.0 - ((pr.nn - pr.kk) / pr.nn) * std::exp(-b);
}

// Inverse of mass_fraction; requires a < 1.
double b_of_mass(const TiltProblem& pr, double a) {
  return -std::log((1.0 - a) * pr.nn / (pr.nn - pr.kk));
}

// Mass-balance defect h(b) = sum of exceedance weights - required exceedance
// mass, evaluated through the inner tilt. Outside the feasible window the
// limiting sign is returned as +/-1e300 so the bracketed search can only step
// back inside.
double balance(const TiltProblem& pr, double b) {
  const double a1 = mass_fraction(pr, b);
  if (!(a1 > pr.a_floor)) return 1e300;
  if (!(a1 < pr.a_ceil)) return -1e300;
  const double lg = std::log(a1 / pr.p);
  const double t = pr.L / lg;
  if (!(t < pr.z_max)) return 1e300;
  if (!(t > pr.z_min)) return -1e300;
  double lam;
  try {
    lam = solve_inner_lambda(pr.ts->z, t, pr.z_min, pr.z_max);
  } catch (const infeasible_target_error&) {
    return t >= 0.5 * (pr.z_min + pr.z_max) ? 1e300 : -1e300;
  }
  double m = -kInf;
  for (double zi : pr.ts->z) m = std::max(m, -lam * zi);
  double s = 0.0;
  for (double zi : pr.ts->z) s += std::exp(-lam * zi - m);
  const double log_mass =
      -b + lam * (t - t * t / pr.L) - std::log(pr.nn) + m + std::log(s);
  if (log_mass > 690.0) return 1e300;
  return std::exp(log_mass) - a1;
}

TiltSolution tilt_stat_impl(const TailSample& ts, double p, double x_p, const double* warm_b) {
  check_inputs(p, x_p);
  TiltProblem pr;
  pr.ts = &ts;
  pr.p = p;
  pr.nn = static_cast<double>(ts.n);
  pr.kk = static_cast<double>(ts.k);
  pr.L = std::log(x_p / ts.threshold);
  pr.z_max = ts.z.front();
  pr.z_min = ts.z.back();

  const double log_ratio = std::log(pr.kk / (pr.nn * p));
  const double t_limit = std::log(1.0 / p) > 0.0 ? pr.L / std::log(1.0 / p) : pr.L;
  if (!(pr.L > 0.0) || !(pr.z_max > 0.0)) {
    throw infeasible_target_error("hypothesized quantile admits no exponential tilt",
                                  t_limit, pr.z_min, pr.z_max);
  }

  // Closed-form window for the exceedance mass, hence for b = 1 + lambda1.
  pr.a_floor = p * std::exp(pr.L / pr.z_max);
  pr.a_ceil = pr.z_min > 0.0 ? p * std::exp(pr.L / pr.z_min) : kInf;
  if (!(pr.a_floor < 1.0) || !(pr.a_floor < pr.a_ceil)) {
    throw infeasible_target_error("hypothesized quantile admits no exponential tilt",
                                  t_limit, pr.z_min, pr.z_max);
  }
  const double b_floor = b_of_mass(pr, pr.a_floor);
  const double b_ceil = pr.a_ceil < 1.0 ? b_of_mass(pr, pr.a_ceil) : kInf;
  const double lo_lim = b_floor + 1e-9 * std::max(1.0, std::fabs(b_floor));
  const double hi_lim =
      std::isfinite(b_ceil) ? b_ceil - 1e-9 * std::max(1.0, std::fabs(b_ceil)) : kInf;
  if (!(lo_lim < hi_lim)) {
    throw infeasible_target_error("feasible multiplier window is numerically empty", t_limit,
                                  pr.z_min, pr.z_max);
  }
  auto clamp_b = [&](double v) { return std::min(std::max(v, lo_lim), hi_lim); };

  // Initial bracket in b, centered on the uniform-weight point b = 0 with a
  // width matched to the sampling scale of the mass imbalance, or on the
  // solution of a neighboring problem when one is supplied.
  double blo, bhi;
  if (warm_b != nullptr && std::isfinite(*warm_b)) {
    const double w = std::max(0.02, 0.1 * std::fabs(*warm_b));
    blo = clamp_b(*warm_b - w);
    bhi = clamp_b(*warm_b + w);
  } else {
    double s0 = log_ratio > 0.0 ? std::sqrt(pr.kk) * std::sqrt(log_ratio) / (pr.nn - pr.kk)
                                : std::sqrt(pr.kk) / (pr.nn - pr.kk);
    s0 = std::min(s0, 0.95);
    blo = clamp_b(-std::log1p(s0));
    bhi = clamp_b(-std::log1p(-s0));
  }
  if (!(blo < bhi)) {
    blo = lo_lim;
    bhi = hi_lim;
    if (!std::isfinite(bhi)) bhi = std::max(1.0, lo_lim + 1.0);
  }

  double fl = balance(pr, blo);
  double fh = balance(pr, bhi);
  double width = bhi - blo;
  for (int j = 0; j < 8 && fl < 0.0 && blo > lo_lim; ++j) {
    width *= 2.0;
    blo = clamp_b(blo - width);
    fl = balance(pr, blo);
  }
  for (int j = 0; j < 8 && fh > 0.0 && bhi < hi_lim; ++j) {
    width *= 2.0;
    bhi = clamp_b(bhi + width);
    fh = balance(pr, bhi);
  }

  auto h = [&](double b) { return balance(pr, b); };
  const RootResult root = bracketed_root(h, blo, bhi, fl, fh, 1e-12, 0.0, 300);
  double b = root.x;
  double hb = root.fx;

  // The width stop under-resolves the balance when the hypothesized point
  // sits barely above the threshold: there the balance reacts to b through
  // the inner tilt thousands of times faster than b itself moves, so a
  // width-converged root can still carry a noticeable mass imbalance. Polish
  // by bisecting on the imbalance directly until it is negligible against
  // the exceedance mass.
  {
    const double target = 1e-10 * mass_fraction(pr, b);
    if (std::fabs(hb) > target) {
      double wlo = b, whi = b, flo = hb, fhi = hb;
      double delta = 1e-12 * std::max(1.0, std::fabs(b));
      bool straddle = false;
      for (int j = 0; j < 40 && !straddle; ++j) {
        wlo = clamp_b(b - delta);
        whi = clamp_b(b + delta);
        flo = h(wlo);
        fhi = h(whi);
        straddle = (flo <= 0.0 && fhi >= 0.0) || (flo >= 0.0 && fhi <= 0.0);
        delta *= 4.0;
      }
      for (int j = 0; j < 120 && straddle && std::fabs(hb) > target; ++j) {
        const double mid = 0.5 * (wlo + whi);
        if (!(mid > wlo) || !(mid < whi)) break;
        const double fm = h(mid);
        if (std::fabs(fm) < std::fabs(hb)) {
          b = mid;
          hb = fm;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
          wlo = mid;
          flo = fm;
        } else {
          whi = mid;
          fhi = fm;
        }
      }
    }
  }

  // Assemble the solution at the balanced multiplier.
  const double a1 = mass_fraction(pr, b);
  const double lg = std::log(a1 / p);
  const double t = pr.L / lg;
  if (!(t > pr.z_min && t < pr.z_max)) {
    throw infeasible_target_error("balanced multiplier landed outside the feasible window", t,
                                  pr.z_min, pr.z_max);
  }
  const double lam_hat = solve_inner_lambda(ts.z, t, pr.z_min, pr.z_max);

  TiltSolution sol;
  sol.lambda_hat = lam_hat;
  sol.weights.exceed.resize(ts.k);
  std::vector<double> expo(ts.k);
  const double shift = lam_hat * (t - t * t / pr.L);
  double S = 0.0, W = 0.0;
  for (std::size_t i = 0; i < ts.k; ++i) {
    expo[i] = -b + shift - lam_hat * ts.z[i];
    const double qi = std::exp(expo[i]) / pr.nn;
    sol.weights.exceed[i] = qi;
    S += qi;
    W += qi * ts.z[i];
  }
  if (!(S > 0.0) || !(S < 1.0)) {
    throw solver_error("exceedance weights left no mass for the censored block");
  }
  if (!(W > 0.0)) {
    throw solver_error("tilted weights give the spacings nonpositive mass");
  }

  // Exact-complement assembly: hand the censored block precisely the mass
  // the exceedances leave over. The reported weights are then an exact
  // probability vector however stiff the balance root was, which also keeps
  // the divergence nonnegative by construction.
  sol.weights.censored = (1.0 - S) / (pr.nn - pr.kk);
  const double cens_scaled = pr.nn * sol.weights.censored;
  const double b_eff = -std::log(cens_scaled);
  sol.lambda1 = b_eff - 1.0;
  const double lg_real = std::log(S / p);
  sol.lambda2 = lam_hat * S * pr.L / (lg_real * lg_real);
  sol.mass_residual = std::fabs(S + (pr.nn - pr.kk) * sol.weights.censored - 1.0);
  if (sol.mass_residual > 1e-10) {
    throw solver_error("tilted weights fail the unit-mass balance");
  }
  sol.constraint_residual = std::fabs((S / W) * pr.L - lg_real);
  if (sol.constraint_residual > 1e-8) {
    throw solver_error("tilted weights fail the quantile constraint");
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < ts.k; ++i) acc += std::exp(expo[i]) * expo[i];
  double stat = 2.0 * acc + 2.0 * (pr.nn - pr.kk) * cens_scaled * std::log(cens_scaled);
  if (stat < -1e-9) {
    throw solver_error("tilting statistic fell below the negative tolerance floor");
  }
  sol.stat = std::max(stat, 0.0);
  return sol;
}

}  // namespace

std::vector<double> full_weights(const TiltWeights& w, std::size_t n) {
  if (w.exceed.size() > n) {
    throw std::invalid_argument("more exceedance weights than observations");
  }
  std::vector<double> q(n, w.censored);
  std::copy(w.exceed.begin(), w.exceed.end(), q.begin());
  return q;
}

double tilt_distance(std::span<const double> q, double rho0) {
  if (q.empty()) throw std::invalid_argument("empty weight vector");
  double sum = 0.0;
  for (double v : q) {
    if (!(v >= 0.0)) throw std::domain_error("weights must be nonnegative");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-6) {
    throw std::domain_error("weights must sum to 1");
  }
  const double nd = static_cast<double>(q.size());
  if (rho0 == 1.0) {
    double acc = 0.0;
    for (double v : q) {
      if (v > 0.0) acc += v * std::log(nd * v);
    }
    return acc;
  }
  if (rho0 == 0.0) {
    double acc = 0.0;
    for (double v : q) acc += std::log(nd * v);
    return -acc / nd;
  }
  double acc = 0.0;
  for (double v : q) acc += std::pow(nd * v, rho0);
  return (1.0 - acc / nd) / (rho0 * (1.0 - rho0));
}

double tilt_distance(const TiltWeights& w, std::size_t n, double rho0) {
  const std::vector<double> q = full_weights(w, n);
  return tilt_distance(std::span<const double>(q), rho0);
}

TiltedFit tilted_fit(const TiltWeights& w, const TailSample& ts) {
  if (w.exceed.size() != ts.k) {
    throw std::invalid_argument("exceedance weight count must match the tail size");
  }
  double S = 0.0, W = 0.0;
  for (std::size_t i = 0; i < ts.k; ++i) {
    S += w.exceed[i];
    W += w.exceed[i] * ts.z[i];
  }
  if (!(S > 0.0)) throw estimation_error("reweighted tail carries no mass");
  if (!(W > 0.0)) throw estimation_error("reweighted spacings have nonpositive mean");
  TiltedFit fit;
  fit.gamma = S / W;
  fit.c = std::pow(ts.threshold, fit.gamma) * S;
  return fit;
}

TiltedFit tilted_fit(std::span<const double> q, const TailSample& ts) {
  if (q.size() != ts.n) {
    throw std::invalid_argument("weight vector length must match the sample size");
  }
  TiltWeights w;
  w.exceed.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(ts.k));
  w.censored = ts.k < ts.n ? q[ts.k] : 0.0;
  return tilted_fit(w, ts);
}

double tilted_spacing_mean(std::span<const double> z, double lambda) {
  if (z.empty()) throw std::invalid_argument("empty spacing vector");
  double m = -kInf;
  for (double v : z) m = std::max(m, -lambda * v);
  double sw = 0.0, swz = 0.0;
  for (double v : z) {
    const double w = std::exp(-lambda * v - m);
    sw += w;
    swz += w * v;
  }
  return swz / sw;
}

TiltWeights weights_from_multipliers(double lambda1, double lambda2, const TailSample& ts,
                                     double p, double x_p) {
  check_inputs(p, x_p);
  const double nn = static_cast<double>(ts.n);
  const double kk = static_cast<double>(ts.k);
  const double L = std::log(x_p / ts.threshold);
  if (L == 0.0) {
    throw std::domain_error("hypothesized quantile coincides with the threshold");
  }
  const double b = 1.0 + lambda1;
  const double a1 = 1.0 - ((nn - kk) / nn) * std::exp(-b);
  if (!(a1 > 0.0)) {
    throw std::domain_error("censored mass exceeds the whole sample mass");
  }
  const double lg = std::log(a1 / p);
  TiltWeights w;
  w.censored = std::exp(-b) / nn;
  w.exceed.resize(ts.k);
  for (std::size_t i = 0; i < ts.k; ++i) {
    const double e = -b + lambda2 * (lg - 1.0 - ts.z[i] * lg * lg / L) / a1;
    w.exceed[i] = std::exp(e) / nn;
  }
  return w;
}

InnerSolution inner_solve(const TailSample& ts, double p, double x_p, double lambda1) {
  check_inputs(p, x_p);
  const double nn = static_cast<double>(ts.n);
  const double kk = static_cast<double>(ts.k);
  const double L = std::log(x_p / ts.threshold);
  const double b = 1.0 + lambda1;
  const double a1 = 1.0 - ((nn - kk) / nn) * std::exp(-b);
  if (!(a1 > 0.0)) {
    throw std::domain_error("censored mass exceeds the whole sample mass");
  }
  const double z_max = ts.z.front();
  const double z_min = ts.z.back();
  const double lg = std::log(a1 / p);
  const double t = L / lg;
  if (!(t > z_min && t < z_max)) {
    throw infeasible_target_error("tilted spacing-mean target is unattainable", t, z_min,
                                  z_max);
  }
  InnerSolution sol;
  sol.lambda_hat = solve_inner_lambda(ts.z, t, z_min, z_max);
  sol.lambda2 = sol.lambda_hat * a1 * L / (lg * lg);
  sol.target = t;
  return sol;
}

TiltSolution tilt_stat(const TailSample& ts, double p, double x_p) {
  return tilt_stat_impl(ts, p, x_p, nullptr);
}

Region tilt_region(const TailSample& ts, double p, Level level, RegionMode mode) {
  const double u = chi2_1_quantile(level);
  const double gamma = hill(ts);
  const double x_hat = weissman_quantile(ts, p);
  const double kk = static_cast<double>(ts.k);
  const double log_ratio = std::log(kk / (static_cast<double>(ts.n) * p));
  const double hint =
      two_sided_z(level) * std::max(std::fabs(log_ratio), 1e-3) / (gamma * std::sqrt(kk));
  double warm = std::numeric_limits<double>::quiet_NaN();
  auto fn = [&ts, p, warm](double x) mutable -> StatProbe {
    try {
      const TiltSolution s =
          tilt_stat_impl(ts, p, x, std::isnan(warm) ? nullptr : &warm);
      warm = s.lambda1 + 1.0;
      return {s.stat, true};
    } catch (const infeasible_target_error&) {
      return {0.0, false};
    } catch (const no_root_error&) {
      return {0.0, false};
    }
  };
  return scan_region(fn, x_hat, u, level, Method::tilt, mode, hint);
}

}  // namespace tailcr
