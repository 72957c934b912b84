#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tailcr/rng.hpp"

namespace testsupport {

std::vector<double> draw(const tailcr::HeavyDist& d, std::size_t n, std::uint64_t seed) {
  tailcr::UniformStream u(seed);
  return tailcr::sample(d, n, u);
}

tailcr::TailSample ts_from_z(std::vector<double> z_desc, double threshold, std::size_t n) {
  if (z_desc.empty() || z_desc.size() + 1 > n) {
    throw std::invalid_argument("need 1 <= k <= n-1 spacings");
  }
  tailcr::TailSample ts;
  ts.n = n;
  ts.k = z_desc.size();
  ts.threshold = threshold;
  ts.z_sum = std::accumulate(z_desc.begin(), z_desc.end(), 0.0);
  ts.z = std::move(z_desc);
  return ts;
}

double ks_uniform(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double hi = (static_cast<double>(i) + 1.0) / n - u[i];
    const double lo = u[i] - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  return d;
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(std::span<const double> v) {
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double chi2_1_cdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::erf(std::sqrt(x / 2.0));
}

}  // namespace testsupport
