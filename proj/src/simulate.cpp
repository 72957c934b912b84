#include "tailcr/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tailcr/errors.hpp"
#include "tailcr/rng.hpp"
#include "tailcr/tail_sample.hpp"

namespace tailcr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.k_grid.empty()) throw std::invalid_argument("k grid must not be empty");
  if (cfg.methods.empty()) throw std::invalid_argument("method list must not be empty");
  if (cfg.reps == 0) throw std::invalid_argument("replicate count must be positive");
  if (!(cfg.p > 0.0 && cfg.p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
  for (std::size_t k : cfg.k_grid) {
    if (k == 0 || k >= cfg.n) {
      throw std::invalid_argument("every k must satisfy 1 <= k <= n-1");
    }
  }
}

// Replicate outcome codes used in the per-replicate result slots.
enum : std::uint8_t { kMiss = 0, kCover = 1, kFailure = 2 };

std::uint8_t coverage_code(const TailSample& ts, double p, Level level, double u, Method m,
                           double x_true) {
  try {
    switch (m) {
      case Method::normal: {
        const Region r = normal_region(ts, p, level);
        return (r.lo <= x_true && x_true <= r.hi) ? kCover : kMiss;
      }
      case Method::lr:
        return lr_stat(ts, p, x_true).stat <= u ? kCover : kMiss;
      case Method::tilt:
        return tilt_stat(ts, p, x_true).stat <= u ? kCover : kMiss;
    }
  } catch (const infeasible_target_error&) {
    return kMiss;  // definite verdict: the point lies outside the attainable region
  } catch (const estimation_error&) {
    return kFailure;
  } catch (const solver_error&) {
    return kFailure;
  }
  return kFailure;
}

Region build_region(const TailSample& ts, double p, Level level, Method m, RegionMode mode) {
  switch (m) {
    case Method::normal:
      return normal_region(ts, p, level);
    case Method::lr:
      return lr_region(ts, p, level, mode);
    case Method::tilt:
      return tilt_region(ts, p, level, mode);
  }
  throw std::logic_error("unknown method");
}

std::vector<double> replicate_sample_sorted(const ExperimentConfig& cfg, std::size_t rep) {
  UniformStream stream(replicate_seed(cfg.seed, rep));
  std::vector<double> data = sample(cfg.dist, cfg.n, stream);
  std::sort(data.begin(), data.end(), std::greater<>());
  return data;
}

}  // namespace

ExperimentTable run_coverage(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const double x_true = upper_quantile(cfg.dist, cfg.p);
  const double u = chi2_1_quantile(cfg.level);
  const std::size_t nm = cfg.methods.size();
  const std::size_t cells = cfg.k_grid.size() * nm;
  std::vector<std::uint8_t> codes(cfg.reps * cells, kFailure);

  parallel_for(cfg.reps, [&](std::size_t rep) {
    const std::vector<double> data = replicate_sample_sorted(cfg, rep);
    std::uint8_t* slot = codes.data() + rep * cells;
    for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
      try {
        const TailSample ts = make_tail_sample_sorted(data, cfg.k_grid[ki]);
        for (std::size_t mi = 0; mi < nm; ++mi) {
          slot[ki * nm + mi] =
              coverage_code(ts, cfg.p, cfg.level, u, cfg.methods[mi], x_true);
        }
      } catch (const estimation_error&) {
        for (std::size_t mi = 0; mi < nm; ++mi) slot[ki * nm + mi] = kFailure;
      }
    }
  });

  ExperimentTable table;
  table.config = cfg;
  for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
    for (std::size_t mi = 0; mi < nm; ++mi) {
      std::size_t covered = 0, failures = 0;
      for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        const std::uint8_t c = codes[rep * cells + ki * nm + mi];
        covered += c == kCover;
        failures += c == kFailure;
      }
      const double v = static_cast<double>(covered) / static_cast<double>(cfg.reps);
      const double se = std::sqrt(v * (1.0 - v) / static_cast<double>(cfg.reps));
      table.rows.push_back({cfg.k_grid[ki], cfg.methods[mi], "coverage", v, se, failures});
    }
  }
  return table;
}

ExperimentTable run_length(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const std::size_t nm = cfg.methods.size();
  const std::size_t cells = cfg.k_grid.size() * nm;
  std::vector<double> lengths(cfg.reps * cells, kNaN);
  std::vector<std::uint8_t> codes(cfg.reps * cells, kFailure);

  parallel_for(cfg.reps, [&](std::size_t rep) {
    const std::vector<double> data = replicate_sample_sorted(cfg, rep);
    const std::size_t base = rep * cells;
    for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
      for (std::size_t mi = 0; mi < nm; ++mi) {
        const std::size_t idx = base + ki * nm + mi;
        try {
          const TailSample ts = make_tail_sample_sorted(data, cfg.k_grid[ki]);
          const Region r =
              build_region(ts, cfg.p, cfg.level, cfg.methods[mi], cfg.region_mode);
          lengths[idx] = r.hi - r.lo;
          codes[idx] = kCover;
        } catch (const estimation_error&) {
          codes[idx] = kFailure;
        } catch (const solver_error&) {
          codes[idx] = kFailure;
        }
      }
    }
  });

  ExperimentTable table;
  table.config = cfg;
  for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
    for (std::size_t mi = 0; mi < nm; ++mi) {
      std::size_t m = 0, failures = 0;
      double sum = 0.0;
      for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        const std::size_t idx = rep * cells + ki * nm + mi;
        if (codes[idx] == kCover) {
          ++m;
          sum += lengths[idx];
        } else {
          ++failures;
        }
      }
      double mean = kNaN, se = kNaN;
      if (m > 0) {
        mean = sum / static_cast<double>(m);
        if (m > 1) {
          double ss = 0.0;
          for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
            const std::size_t idx = rep * cells + ki * nm + mi;
            if (codes[idx] == kCover) {
              const double d = lengths[idx] - mean;
              ss += d * d;
            }
          }
          se = std::sqrt(ss / static_cast<double>(m - 1)) /
               std::sqrt(static_cast<double>(m));
        }
      }
      table.rows.push_back(
          {cfg.k_grid[ki], cfg.methods[mi], "mean_length", mean, se, failures});
    }
  }
  return table;
}

std::vector<ProfilePoint> profile_curve(std::span<const double> data, double p, std::size_t k,
                                        std::span<const double> offsets,
                                        std::optional<double> center) {
  const TailSample ts = make_tail_sample(data, k);
  const double gamma = hill(ts);
  const double x_hat = weissman_quantile(ts, p);
  const double log_ratio =
      std::log(static_cast<double>(ts.k) / (static_cast<double>(ts.n) * p));
  const double ctr = center.value_or(x_hat);
  if (!(ctr > 0.0) || !std::isfinite(ctr)) {
    throw std::domain_error("profile center must be positive and finite");
  }

  std::vector<ProfilePoint> out;
  out.reserve(3 * offsets.size());
  const Method methods[] = {Method::normal, Method::lr, Method::tilt};
  for (Method m : methods) {
    for (double off : offsets) {
      const double x = ctr + off;
      ProfilePoint pt{x, m, false, kNaN};
      if (x > 0.0 && std::isfinite(x)) {
        try {
          switch (m) {
            case Method::normal:
              if (log_ratio > 0.0) {
                const double s = std::log(x / x_hat) * gamma *
                                 std::sqrt(static_cast<double>(ts.k)) / log_ratio;
                pt.stat = s * s;
                pt.feasible = true;
              }
              break;
            case Method::lr:
              pt.stat = lr_stat(ts, p, x).stat;
              pt.feasible = true;
              break;
            case Method::tilt:
              pt.stat = tilt_stat(ts, p, x).stat;
              pt.feasible = true;
              break;
          }
        } catch (const solver_error&) {
          pt.feasible = false;
          pt.stat = kNaN;
        }
      }
      out.push_back(pt);
    }
  }
  return out;
}

std::vector<ScanRow> kscan(std::span<const double> data, double p, Level level,
                           std::span<const std::size_t> k_grid,
                           std::span<const Method> methods, RegionMode mode) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("tail probability must lie in (0,1)");
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const std::size_t nm = methods.size();
  std::vector<ScanRow> rows(k_grid.size() * nm);
  parallel_for(k_grid.size(), [&](std::size_t ki) {
    const std::size_t k = k_grid[ki];
    for (std::size_t mi = 0; mi < nm; ++mi) {
      ScanRow& row = rows[ki * nm + mi];
      row.k = k;
      row.method = methods[mi];
      row.ok = false;
      row.lo = row.hi = row.x_hat = row.gamma_hat = kNaN;
    }
    TailSample ts;
    double gamma = kNaN, x_hat = kNaN;
    try {
      ts = make_tail_sample_sorted(sorted, k);
      gamma = hill(ts);
      x_hat = weissman_quantile(ts, p);
    } catch (const std::exception& e) {
      for (std::size_t mi = 0; mi < nm; ++mi) rows[ki * nm + mi].note = e.what();
      return;
    }
    for (std::size_t mi = 0; mi < nm; ++mi) {
      ScanRow& row = rows[ki * nm + mi];
      row.x_hat = x_hat;
      row.gamma_hat = gamma;
      try {
        const Region r = build_region(ts, p, level, methods[mi], mode);
        row.ok = true;
        row.lo = r.lo;
        row.hi = r.hi;
      } catch (const std::exception& e) {
        row.note = e.what();
      }
    }
  });
  return rows;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("TAILCR_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          if (stop.load(std::memory_order_relaxed)) break;
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= count) break;
          body(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace tailcr
