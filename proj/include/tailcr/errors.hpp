#pragma once

#include <stdexcept>
#include <string>

namespace tailcr {

// Degenerate input that passed validation but defeats an estimator
// (e.g. all tail spacings zero).
struct estimation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base for numerical solver failures. Simulation code catches these per
// replicate and tallies them; they never abort a run.
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sign change could not be established for a root search.
struct no_root_error : solver_error {
  no_root_error(const std::string& what, double lo_, double hi_, double f_lo_, double f_hi_)
      : solver_error(what + " [bracket " + std::to_string(lo_) + ".." + std::to_string(hi_) +
                     ", f " + std::to_string(f_lo_) + ".." + std::to_string(f_hi_) + "]"),
        lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {}
  double lo, hi, f_lo, f_hi;
};

// Tilting target outside the attainable range of the spacing mean.
struct infeasible_target_error : solver_error {
  infeasible_target_error(const std::string& what, double target_, double z_min_, double z_max_)
      : solver_error(what + " [target " + std::to_string(target_) + " not in (" +
                     std::to_string(z_min_) + ", " + std::to_string(z_max_) + ")]"),
        target(target_), z_min(z_min_), z_max(z_max_) {}
  double target, z_min, z_max;
};

// A region scan exhausted its doubling budget without crossing the threshold.
struct unbounded_region_error : solver_error {
  using solver_error::solver_error;
};

}  // namespace tailcr
