#include "tailcr/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tailcr/csv.hpp"
#include "tailcr/errors.hpp"
#include "tailcr/simulate.hpp"
#include "tailcr/tail_sample.hpp"

namespace tailcr {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": \"" + s + "\"");
  }
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": \"" + s + "\"");
  }
}

// "lo:hi[:step]" (inclusive arithmetic ramp) or a comma list.
std::vector<std::size_t> parse_size_grid(const std::string& s) {
  std::vector<std::size_t> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 2 && parts.size() != 3) {
      throw std::invalid_argument("grid must look like lo:hi or lo:hi:step, got \"" + s + "\"");
    }
    const std::size_t lo = parse_count(parts[0], "grid start");
    const std::size_t hi = parse_count(parts[1], "grid end");
    const std::size_t step = parts.size() == 3 ? parse_count(parts[2], "grid step") : 1;
    if (step == 0) throw std::invalid_argument("grid step must be positive");
    if (hi < lo) throw std::invalid_argument("grid end must not precede its start");
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  for (const std::string& part : split(s, ',')) {
    out.push_back(parse_count(part, "grid entry"));
  }
  return out;
}

std::vector<double> parse_double_grid(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("grid must look like lo:hi:step, got \"" + s + "\"");
    }
    const double lo = parse_number(parts[0], "grid start");
    const double hi = parse_number(parts[1], "grid end");
    const double step = parse_number(parts[2], "grid step");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (hi < lo) throw std::invalid_argument("grid end must not precede its start");
    for (std::size_t i = 0;; ++i) {
      const double v = lo + static_cast<double>(i) * step;
      if (v > hi + 1e-9 * step) break;
      out.push_back(v);
    }
    return out;
  }
  for (const std::string& part : split(s, ',')) {
    out.push_back(parse_number(part, "grid entry"));
  }
  return out;
}

std::vector<Method> parse_methods(const std::string& s) {
  std::vector<Method> out;
  for (const std::string& part : split(s, ',')) {
    out.push_back(method_from_name(part));
  }
  return out;
}

struct InputOpts {
  std::string input;
  std::string dist;
  double a = 1.0;
  double b = 2.0;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  bool skip_invalid = false;
};

void add_input_options(CLI::App* cmd, InputOpts& io) {
  cmd->add_option("--input", io.input, "single-column CSV of positive observations");
  cmd->add_option("--dist", io.dist, "synthetic family instead of --input: burr or frechet");
  cmd->add_option("--a", io.a, "first family parameter (tail exponent)");
  cmd->add_option("--b", io.b, "second burr parameter (requires a < b)");
  cmd->add_option("--n", io.n, "synthetic sample size");
  cmd->add_option("--seed", io.seed, "synthetic sampling seed");
  cmd->add_flag("--skip-invalid", io.skip_invalid,
                "drop nonpositive/non-numeric input values instead of failing");
}

HeavyDist parse_dist(const std::string& name, double a, double b) {
  if (name == "burr") return make_burr(a, b);
  if (name == "frechet") return make_frechet(a);
  throw std::invalid_argument("unknown distribution \"" + name + "\" (use burr or frechet)");
}

struct ObtainedData {
  std::vector<double> values;
  std::optional<HeavyDist> dist;
};

ObtainedData obtain_data(const InputOpts& io) {
  if (!io.input.empty() && !io.dist.empty()) {
    throw std::invalid_argument("pass either --input or --dist, not both");
  }
  ObtainedData got;
  if (!io.input.empty()) {
    Dataset ds = load_csv(io.input, io.skip_invalid);
    if (ds.skipped > 0) {
      std::cerr << "note: skipped " << ds.skipped << " invalid value(s) in " << ds.source
                << "\n";
    }
    got.values = std::move(ds.values);
    return got;
  }
  if (io.dist.empty()) {
    throw std::invalid_argument("provide --input FILE or --dist burr|frechet");
  }
  const HeavyDist d = parse_dist(io.dist, io.a, io.b);
  got.dist = d;
  UniformStream stream(io.seed);
  got.values = sample(d, io.n, stream);
  return got;
}

RegionMode make_mode(const std::string& scan, double step) {
  RegionMode mode;
  if (scan == "bisect") {
    mode.kind = RegionMode::Kind::bisect;
  } else if (scan == "step") {
    mode.kind = RegionMode::Kind::step;
  } else {
    throw std::invalid_argument("unknown scan mode \"" + scan + "\" (use bisect or step)");
  }
  if (!(step > 0.0)) throw std::invalid_argument("step width must be positive");
  mode.step = step;
  return mode;
}

Region region_for(const TailSample& ts, double p, Level level, Method m, RegionMode mode) {
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

void emit(const Table& t, const std::string& out) {
  if (out.empty()) {
    write_csv(t, std::cout);
  } else {
    write_csv(t, out);
  }
}

// Option holders for the subcommands.
struct CiOpts {
  InputOpts in;
  std::size_t k = 0;
  double p = 0.01;
  double level = 0.9;
  std::string methods = "normal,lr,tilt";
  std::string scan = "bisect";
  double step = 0.1;
  std::string out;
};

struct SimOpts {
  std::string dist = "burr";
  double a = 1.0;
  double b = 2.0;
  std::size_t n = 1000;
  std::size_t reps = 2000;
  double p = 0.01;
  std::string k = "100";
  std::string methods = "normal,lr,tilt";
  double level = 0.9;
  std::uint64_t seed = 1;
  std::string scan = "bisect";
  double step = 0.1;
  std::string out;
};

struct ProfileOpts {
  InputOpts in;
  std::size_t k = 0;
  double p = 0.01;
  std::string offsets;
  std::string center = "estimate";
  std::string out;
};

struct KscanOpts {
  InputOpts in;
  std::string k;
  double p = 0.01;
  double level = 0.9;
  std::string methods = "normal,lr,tilt";
  std::string scan = "bisect";
  double step = 0.1;
  std::string out;
};

struct ExpansionOpts {
  std::string k;
  std::size_t n = 1000;
  double p = 0.01;
  double level = 0.9;
  std::string out;
};

void add_sim_options(CLI::App* cmd, SimOpts& so) {
  cmd->add_option("--dist", so.dist, "family: burr or frechet")->required();
  cmd->add_option("--a", so.a, "first family parameter (tail exponent)");
  cmd->add_option("--b", so.b, "second burr parameter (requires a < b)");
  cmd->add_option("--n", so.n, "sample size per replicate");
  cmd->add_option("--reps", so.reps, "number of replicates");
  cmd->add_option("--p", so.p, "tail probability of the target quantile");
  cmd->add_option("--k", so.k, "tail size grid: lo:hi[:step] or a comma list");
  cmd->add_option("--methods", so.methods, "comma list of normal,lr,tilt");
  cmd->add_option("--level", so.level, "confidence level in (0,1)");
  cmd->add_option("--seed", so.seed, "master seed (replicates derive from it)");
  cmd->add_option("--scan", so.scan, "endpoint scan mode: bisect or step");
  cmd->add_option("--step", so.step, "step width for --scan step");
  cmd->add_option("--out", so.out, "output CSV path (default: stdout)");
}

int run_ci(const CiOpts& o) {
  const ObtainedData got = obtain_data(o.in);
  const Level level(o.level);
  const RegionMode mode = make_mode(o.scan, o.step);
  const std::vector<Method> methods = parse_methods(o.methods);
  const TailSample ts = make_tail_sample(got.values, o.k);
  const TailFit fit = fit_tail(ts, o.p);

  Table t;
  t.columns = {"method", "level", "p",  "k",  "n",  "gamma_hat",   "c_hat",      "x_hat",
               "lo",     "hi",    "residual_lo", "residual_hi"};
  for (Method m : methods) {
    const Region r = region_for(ts, o.p, level, m, mode);
    if (r.extrapolation_warning) {
      std::cerr << "warning: k/(n p) <= 1 for method " << method_name(m)
                << "; the target quantile is inside the observed range and the "
                   "interval formula has no extrapolation margin\n";
    }
    if (r.rescanned) {
      std::cerr << "note: interior check failed for method " << method_name(m)
                << "; endpoints come from a step scan\n";
    }
    t.rows.push_back({method_name(m), format_double(level.alpha), format_double(o.p),
                      std::to_string(ts.k), std::to_string(ts.n), format_double(fit.gamma_hat),
                      format_double(fit.c_hat), format_double(fit.x_hat), format_double(r.lo),
                      format_double(r.hi), format_double(r.endpoint_residuals[0]),
                      format_double(r.endpoint_residuals[1])});
  }
  emit(t, o.out);
  return 0;
}

int run_simulate(const SimOpts& o, bool coverage) {
  ExperimentConfig cfg;
  cfg.dist = parse_dist(o.dist, o.a, o.b);
  cfg.n = o.n;
  cfg.reps = o.reps;
  cfg.p = o.p;
  cfg.k_grid = parse_size_grid(o.k);
  cfg.methods = parse_methods(o.methods);
  cfg.level = Level(o.level);
  cfg.seed = o.seed;
  cfg.region_mode = make_mode(o.scan, o.step);
  const ExperimentTable tbl = coverage ? run_coverage(cfg) : run_length(cfg);
  emit(to_table(tbl), o.out);
  return 0;
}

int run_profile(const ProfileOpts& o) {
  const ObtainedData got = obtain_data(o.in);
  if (o.offsets.empty()) {
    throw std::invalid_argument("provide --offsets lo:hi:step or a comma list");
  }
  const std::vector<double> offsets = parse_double_grid(o.offsets);
  std::optional<double> center;
  if (o.center == "estimate") {
    center.reset();
  } else if (o.center == "true") {
    if (!got.dist) {
      throw std::invalid_argument("--center true requires a synthetic --dist dataset");
    }
    center = upper_quantile(*got.dist, o.p);
  } else {
    center = parse_number(o.center, "--center");
  }
  const std::vector<ProfilePoint> points =
      profile_curve(got.values, o.p, o.k, offsets, center);
  emit(to_table(points), o.out);
  return 0;
}

int run_kscan(const KscanOpts& o) {
  const ObtainedData got = obtain_data(o.in);
  if (o.k.empty()) throw std::invalid_argument("provide --k as lo:hi[:step] or a comma list");
  const std::vector<std::size_t> k_grid = parse_size_grid(o.k);
  const std::vector<Method> methods = parse_methods(o.methods);
  const Level level(o.level);
  const RegionMode mode = make_mode(o.scan, o.step);
  const std::vector<ScanRow> rows = kscan(got.values, o.p, level, k_grid, methods, mode);
  emit(to_table(rows), o.out);
  return 0;
}

int run_expansion(const ExpansionOpts& o) {
  if (o.k.empty()) throw std::invalid_argument("provide --k as lo:hi[:step] or a comma list");
  const std::vector<std::size_t> k_grid = parse_size_grid(o.k);
  const Table t = expansion_table(k_grid, o.n, o.p, Level(o.level));
  emit(t, o.out);
  return 0;
}

}  // namespace

int cli_main(std::vector<std::string> args) {
  CLI::App app{"Confidence regions for extreme upper quantiles of heavy-tailed data"};
  app.require_subcommand(1);

  CiOpts ci;
  CLI::App* ci_cmd = app.add_subcommand("ci", "intervals for one dataset at one k");
  add_input_options(ci_cmd, ci.in);
  ci_cmd->add_option("--k", ci.k, "number of top order statistics")->required();
  ci_cmd->add_option("--p", ci.p, "tail probability of the target quantile");
  ci_cmd->add_option("--level", ci.level, "confidence level in (0,1)");
  ci_cmd->add_option("--methods", ci.methods, "comma list of normal,lr,tilt");
  ci_cmd->add_option("--scan", ci.scan, "endpoint scan mode: bisect or step");
  ci_cmd->add_option("--step", ci.step, "step width for --scan step");
  ci_cmd->add_option("--out", ci.out, "output CSV path (default: stdout)");

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo experiments");
  sim_cmd->require_subcommand(1);
  SimOpts sim_cov, sim_len;
  CLI::App* cov_cmd = sim_cmd->add_subcommand("coverage", "empirical coverage per (k, method)");
  add_sim_options(cov_cmd, sim_cov);
  CLI::App* len_cmd = sim_cmd->add_subcommand("length", "mean region length per (k, method)");
  add_sim_options(len_cmd, sim_len);

  ProfileOpts prof;
  CLI::App* prof_cmd =
      app.add_subcommand("profile", "statistic curves along a quantile grid");
  add_input_options(prof_cmd, prof.in);
  prof_cmd->add_option("--k", prof.k, "number of top order statistics")->required();
  prof_cmd->add_option("--p", prof.p, "tail probability of the target quantile");
  prof_cmd->add_option("--offsets", prof.offsets, "grid lo:hi:step or comma list, added to the center");
  prof_cmd->add_option("--center", prof.center,
                       "grid center: estimate, true (synthetic only), or a number");
  prof_cmd->add_option("--out", prof.out, "output CSV path (default: stdout)");

  KscanOpts ks;
  CLI::App* ks_cmd = app.add_subcommand("kscan", "regions across a grid of k values");
  add_input_options(ks_cmd, ks.in);
  ks_cmd->add_option("--k", ks.k, "tail size grid: lo:hi[:step] or a comma list")->required();
  ks_cmd->add_option("--p", ks.p, "tail probability of the target quantile");
  ks_cmd->add_option("--level", ks.level, "confidence level in (0,1)");
  ks_cmd->add_option("--methods", ks.methods, "comma list of normal,lr,tilt");
  ks_cmd->add_option("--scan", ks.scan, "endpoint scan mode: bisect or step");
  ks_cmd->add_option("--step", ks.step, "step width for --scan step");
  ks_cmd->add_option("--out", ks.out, "output CSV path (default: stdout)");

  ExpansionOpts ex;
  CLI::App* ex_cmd =
      app.add_subcommand("expansion", "predicted coverage of the normal interval");
  ex_cmd->add_option("--k", ex.k, "tail size grid: lo:hi[:step] or a comma list")->required();
  ex_cmd->add_option("--n", ex.n, "sample size");
  ex_cmd->add_option("--p", ex.p, "tail probability of the target quantile");
  ex_cmd->add_option("--level", ex.level, "confidence level in (0,1)");
  ex_cmd->add_option("--out", ex.out, "output CSV path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tailcr");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (ci_cmd->parsed()) return run_ci(ci);
    if (sim_cmd->parsed()) {
      if (cov_cmd->parsed()) return run_simulate(sim_cov, true);
      if (len_cmd->parsed()) return run_simulate(sim_len, false);
    }
    if (prof_cmd->parsed()) return run_profile(prof);
    if (ks_cmd->parsed()) return run_kscan(ks);
    if (ex_cmd->parsed()) return run_expansion(ex);
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tailcr
