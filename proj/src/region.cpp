#include "tailcr/region.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tailcr/errors.hpp"
#include "tailcr/solve.hpp"

namespace tailcr {

const char* method_name(Method m) {
  switch (m) {
    case Method::normal: return "normal";
    case Method::lr: return "lr";
    case Method::tilt: return "tilt";
  }
  return "?";
}

Method method_from_name(std::string_view s) {
  if (s == "normal") return Method::normal;
  if (s == "lr") return Method::lr;
  if (s == "tilt") return Method::tilt;
  throw std::invalid_argument("unknown method '" + std::string(s) +
                              "' (expected normal, lr, or tilt)");
}

namespace {

// Stand-in statistic for probes that are infeasible: treated as lying outside.
constexpr double kOutside = 1e300;

Region step_scan(const std::function<StatProbe(double)>& stat_fn, double x_hat, double u,
                 Level level, Method method, double step, int& infeasible_probes) {
  if (!(step > 0.0)) throw std::invalid_argument("step mode requires a positive step size");
  Region r;
  r.level = level;
  r.method = method;
  constexpr std::size_t max_steps = 2'000'000;
  const double inf = std::numeric_limits<double>::infinity();

  auto probe = [&](double x) {
    StatProbe pr = stat_fn(x);
    if (!pr.feasible) {
      ++infeasible_probes;
      return inf;
    }
    return pr.value;
  };

  bool found = false;
  for (std::size_t j = 1; j <= max_steps && !found; ++j) {
    const double cand = x_hat + static_cast<double>(j) * step;
    const double val = probe(cand);
    if (val > u) {
      r.hi = cand;
      r.endpoint_residuals[1] = val - u;
      found = true;
    }
  }
  if (!found) {
    throw unbounded_region_error(
        "statistic never exceeded the threshold over the upper step scan");
  }

  found = false;
  double prev = x_hat, prev_val = 0.0;
  for (std::size_t j = 1; j <= max_steps && !found; ++j) {
    const double cand = x_hat - static_cast<double>(j) * step;
    if (!(cand > 0.0)) {
      // Ran off the support; the last positive probe is the endpoint.
      r.lo = prev;
      r.endpoint_residuals[0] = prev_val - u;
      found = true;
      break;
    }
    const double val = probe(cand);
    if (val > u) {
      r.lo = cand;
      r.endpoint_residuals[0] = val - u;
      found = true;
    } else {
      prev = cand;
      prev_val = val;
    }
  }
  if (!found) {
    throw unbounded_region_error(
        "statistic never exceeded the threshold over the lower step scan");
  }
  return r;
}

}  // namespace

Region scan_region(const std::function<StatProbe(double)>& stat_fn, double x_hat, double u,
                   Level level, Method method, RegionMode mode, double log_halfwidth_hint) {
  if (!(x_hat > 0.0) || !std::isfinite(x_hat)) {
    throw std::invalid_argument("region scan requires a positive finite point estimate");
  }
  int infeasible = 0;
  if (mode.kind == RegionMode::Kind::step) {
    Region r = step_scan(stat_fn, x_hat, u, level, method, mode.step, infeasible);
    r.infeasible_probes = infeasible;
    return r;
  }

  const double s0 = std::log(x_hat);
  const StatProbe pr0 = stat_fn(x_hat);
  if (!pr0.feasible || !(pr0.value <= u)) {
    throw solver_error("statistic at the point estimate is not inside the region");
  }
  const double h0 = 0.5 * std::max(log_halfwidth_hint, 1e-8);

  auto probe = [&](double s) {
    StatProbe pr = stat_fn(std::exp(s));
    if (!pr.feasible) {
      ++infeasible;
      return kOutside;
    }
    return pr.value;
  };

  struct Side {
    double s_end;
    double residual;
  };
  auto scan_side = [&](int dir) -> Side {
    double prev_s = s0, prev_f = pr0.value - u;
    double cur_s = 0.0, cur_f = 0.0;
    bool found = false;
    for (int j = 0; j <= 60; ++j) {
      cur_s = s0 + dir * h0 * std::ldexp(1.0, j);
      cur_f = probe(cur_s) - u;
      if (cur_f > 0.0) {
        found = true;
        break;
      }
      prev_s = cur_s;
      prev_f = cur_f;
    }
    if (!found) {
      throw unbounded_region_error(
          std::string("statistic stayed below the threshold after 60 doublings on the ") +
          (dir < 0 ? "lower" : "upper") + " side");
    }
    auto f = [&](double s) { return probe(s) - u; };
    const RootResult rr = bracketed_root(f, prev_s, cur_s, prev_f, cur_f, 1e-11, 0.0, 400);
    return {rr.x, rr.fx};
  };

  const Side up = scan_side(+1);
  const Side down = scan_side(-1);

  Region r;
  r.level = level;
  r.method = method;
  r.lo = std::exp(down.s_end);
  r.hi = std::exp(up.s_end);
  r.endpoint_residuals = {down.residual, up.residual};
  r.infeasible_probes = infeasible;

  // Interior check: the region must be a single interval of sub-threshold
  // statistic values. A violation downgrades the result to a full step scan.
  bool multimodal = false;
  for (int m = 1; m <= 32 && !multimodal; ++m) {
    const double s = down.s_end + (up.s_end - down.s_end) * m / 33.0;
    if (probe(s) > u + 1e-9) multimodal = true;
  }
  if (multimodal) {
    Region rs = step_scan(stat_fn, x_hat, u, level, method, mode.step, infeasible);
    rs.rescanned = true;
    rs.infeasible_probes = infeasible;
    return rs;
  }
  return r;
}

}  // namespace tailcr
