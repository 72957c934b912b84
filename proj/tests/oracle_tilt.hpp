#pragma once

#include "tailcr/tail_sample.hpp"

namespace testsupport {

struct OracleTiltResult {
  double stat;                 // 2 n * divergence at the constrained minimizer
  double constraint_residual;  // |gamma(q) L - log(S/p)| at the minimizer
  double kkt_residual;         // sup-norm of the unexplained divergence gradient
  bool converged;
};

// Brute-force check value for the tilting statistic: minimizes the divergence
// from uniform weights over the full probability simplex subject to the
// quantile constraint, by an augmented-Lagrangian gradient descent on softmax
// logits. Shares no code with the production solver beyond the TailSample
// container; intended for small n only.
OracleTiltResult oracle_tilt_stat(const tailcr::TailSample& ts, double p, double x_p);

}  // namespace testsupport
