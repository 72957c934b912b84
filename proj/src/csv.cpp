#include "tailcr/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tailcr/ci_normal.hpp"

namespace tailcr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool needs_quotes(std::string_view cell) {
  return cell.find_first_of(",\"\n\r") != std::string_view::npos;
}

void write_cell(std::ostream& os, std::string_view cell) {
  if (!needs_quotes(cell)) {
    os << cell;
    return;
  }
  os << '"';
  for (char c : cell) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

std::string region_mode_name(const RegionMode& mode) {
  return mode.kind == RegionMode::Kind::bisect ? "bisect" : "step";
}

}  // namespace

Dataset load_csv(const std::string& path, bool skip_invalid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }

  Dataset ds;
  ds.source = path;
  std::string line;
  std::size_t line_no = 0;
  std::size_t bad = 0;
  std::size_t first_bad_line = 0;
  std::string first_bad_text;
  bool saw_content = false;

  auto note_bad = [&](std::string_view text) {
    ++bad;
    if (bad == 1) {
      first_bad_line = line_no;
      first_bad_text.assign(text.begin(), text.end());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view cell = trim(line);
    if (cell.empty()) continue;
    if (cell.find(',') != std::string_view::npos) {
      throw std::invalid_argument(
          "multi-column CSV is not supported (line " + std::to_string(line_no) + " of " +
          path + "); extract the value column into a single-column file first");
    }
    double v = 0.0;
    const bool numeric = parse_double(cell, v);
    if (!numeric && !saw_content) {
      saw_content = true;  // header line
      continue;
    }
    saw_content = true;
    if (!numeric || !std::isfinite(v) || !(v > 0.0)) {
      note_bad(cell);
      continue;
    }
    ds.values.push_back(v);
  }

  if (bad > 0) {
    if (!skip_invalid) {
      throw std::invalid_argument(
          path + " contains " + std::to_string(bad) +
          " value(s) that are not strictly positive finite numbers (first at line " +
          std::to_string(first_bad_line) + ": \"" + first_bad_text +
          "\"); pass skip_invalid to drop them");
    }
    ds.skipped = bad;
  }
  if (ds.values.empty()) {
    throw std::invalid_argument(path + " contains no usable values");
  }
  return ds;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("failed to format a double");
  return std::string(buf, ptr);
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) os << ',';
    write_cell(os, t.columns[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::logic_error("CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      write_cell(os, row[i]);
    }
    os << '\n';
  }
}

void write_csv(const Table& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  write_csv(t, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed while writing " + path);
  }
}

Table to_table(const ExperimentTable& tbl) {
  const ExperimentConfig& cfg = tbl.config;
  Table t;
  t.columns = {"dist", "a",      "b",    "n",     "p",      "level",    "reps",    "seed",
               "region_mode",    "k",    "method", "metric", "value",   "se",      "failures"};
  const std::string dist = dist_name(cfg.dist.kind);
  const std::string a = format_double(cfg.dist.a);
  const std::string b =
      cfg.dist.kind == DistKind::burr ? format_double(cfg.dist.b) : std::string("NA");
  const std::string n = std::to_string(cfg.n);
  const std::string p = format_double(cfg.p);
  const std::string level = format_double(cfg.level.alpha);
  const std::string reps = std::to_string(cfg.reps);
  const std::string seed = std::to_string(cfg.seed);
  const std::string mode = region_mode_name(cfg.region_mode);
  for (const MetricRow& row : tbl.rows) {
    t.rows.push_back({dist, a, b, n, p, level, reps, seed, mode, std::to_string(row.k),
                      method_name(row.method), row.metric, format_double(row.value),
                      format_double(row.se), std::to_string(row.failures)});
  }
  return t;
}

Table to_table(const std::vector<ScanRow>& rows) {
  Table t;
  t.columns = {"k", "method", "status", "lo", "hi", "x_hat", "gamma_hat", "note"};
  for (const ScanRow& row : rows) {
    t.rows.push_back({std::to_string(row.k), method_name(row.method),
                      row.ok ? "ok" : "failed", format_double(row.lo), format_double(row.hi),
                      format_double(row.x_hat), format_double(row.gamma_hat), row.note});
  }
  return t;
}

Table to_table(const std::vector<ProfilePoint>& points) {
  Table t;
  t.columns = {"x_p", "method", "stat", "flag"};
  for (const ProfilePoint& pt : points) {
    t.rows.push_back({format_double(pt.x_p), method_name(pt.method), format_double(pt.stat),
                      pt.feasible ? "ok" : "infeasible"});
  }
  return t;
}

Table expansion_table(std::span<const std::size_t> k_grid, std::size_t n, double p,
                      Level level) {
  Table t;
  t.columns = {"k", "n", "p", "level", "log_ratio", "predicted_coverage"};
  for (std::size_t k : k_grid) {
    const double log_ratio =
        std::log(static_cast<double>(k) / (static_cast<double>(n) * p));
    const double pc = predicted_coverage(k, n, p, level);
    t.rows.push_back({std::to_string(k), std::to_string(n), format_double(p),
                      format_double(level.alpha), format_double(log_ratio),
                      format_double(pc)});
  }
  return t;
}

}  // namespace tailcr
