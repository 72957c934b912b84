#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tailcr/simulate.hpp"

namespace tailcr {

struct Dataset {
  std::vector<double> values;
  std::string source;
  std::size_t skipped = 0;  // values dropped under skip_invalid
};

// Reads a single-column CSV of strictly positive finite values. A non-numeric
// first line is treated as a header. By default nonpositive or non-finite
// values fail the load (the error reports how many and where); with
// skip_invalid they are dropped and counted instead. Multi-column input is
// rejected.
Dataset load_csv(const std::string& path, bool skip_invalid = false);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Shortest representation that parses back to the same double. NaN becomes
// "NA", infinities "inf"/"-inf".
std::string format_double(double v);

// RFC-4180-style output: comma separated, cells quoted only when needed,
// "\n" line endings, header always present.
void write_csv(const Table& t, std::ostream& os);
void write_csv(const Table& t, const std::string& path);

// Serialization of the harness products. Column orders are stable and
// documented in the README.
Table to_table(const ExperimentTable& tbl);
Table to_table(const std::vector<ScanRow>& rows);
Table to_table(const std::vector<ProfilePoint>& points);
Table expansion_table(std::span<const std::size_t> k_grid, std::size_t n, double p,
                      Level level);

}  // namespace tailcr
