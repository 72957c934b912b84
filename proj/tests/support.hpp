#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tailcr/distributions.hpp"
#include "tailcr/tail_sample.hpp"

namespace testsupport {

// Fresh synthetic dataset (positive, heavy tailed) from a named seed.
std::vector<double> draw(const tailcr::HeavyDist& d, std::size_t n, std::uint64_t seed);

// Builds a tail view directly from prescribed log-spacings (nonincreasing,
// nonnegative) over a given threshold and nominal sample size.
tailcr::TailSample ts_from_z(std::vector<double> z_desc, double threshold, std::size_t n);

// Kolmogorov-Smirnov distance between a sample of values in [0,1] and the
// uniform distribution.
double ks_uniform(std::vector<double> u);

double mean(std::span<const double> v);
double sample_sd(std::span<const double> v);

// P(chi-square with 1 df <= x).
double chi2_1_cdf(double x);

}  // namespace testsupport
