#include "tailcr/tail_sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tailcr/errors.hpp"

namespace tailcr {

namespace {

void check_k(std::size_t k, std::size_t n) {
  if (k < 1 || k + 1 > n) {
    throw std::invalid_argument("k must satisfy 1 <= k <= n-1 (got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  }
}

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("tail probability must lie in (0,1)");
  }
}

}  // namespace

TailSample make_tail_sample_sorted(std::span<const double> sorted_desc, std::size_t k) {
  const std::size_t n = sorted_desc.size();
  check_k(k, n);
  const double threshold = sorted_desc[k];
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("the k+1 largest observations must be strictly positive");
  }
  TailSample ts;
  ts.n = n;
  ts.k = k;
  ts.threshold = threshold;
  ts.z.resize(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (sorted_desc[i] < sorted_desc[i + 1]) {
      throw std::invalid_argument("data is not sorted in nonincreasing order");
    }
    ts.z[i] = std::log(sorted_desc[i] / threshold);
    sum += ts.z[i];
  }
  ts.z_sum = sum;
  return ts;
}

TailSample make_tail_sample(std::span<const double> data, std::size_t k) {
  check_k(k, data.size());
  std::vector<double> buf(data.begin(), data.end());
  std::partial_sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k + 1), buf.end(),
                    std::greater<>());
  return make_tail_sample_sorted(buf, k);
}

double hill(const TailSample& ts) {
  if (!(ts.z_sum > 0.0)) {
    throw estimation_error("all tail spacings are zero; the top k+1 observations are tied");
  }
  return static_cast<double>(ts.k) / ts.z_sum;
}

double c_hat(const TailSample& ts) {
  const double gamma = hill(ts);
  return (static_cast<double>(ts.k) / static_cast<double>(ts.n)) *
         std::pow(ts.threshold, gamma);
}

double weissman_quantile(const TailSample& ts, double p) {
  check_p(p);
  const double gamma = hill(ts);
  const double ratio = static_cast<double>(ts.k) / (static_cast<double>(ts.n) * p);
  return ts.threshold * std::pow(ratio, 1.0 / gamma);
}

double censored_loglik(const TailSample& ts, double gamma, double c) {
  if (!(gamma > 0.0) || !(c > 0.0)) {
    throw std::domain_error("censored_loglik requires gamma > 0 and c > 0");
  }
  const double tail_prob = c * std::pow(ts.threshold, -gamma);
  if (!(tail_prob > 0.0 && tail_prob < 1.0)) {
    throw std::domain_error("c * threshold^-gamma must lie in (0,1)");
  }
  const double k = static_cast<double>(ts.k);
  const double n = static_cast<double>(ts.n);
  const double sum_log_x = ts.z_sum + k * std::log(ts.threshold);
  return k * std::log(c * gamma) - (gamma + 1.0) * sum_log_x +
         (n - k) * std::log1p(-tail_prob);
}

TailFit fit_tail(const TailSample& ts, double p) {
  check_p(p);
  TailFit f;
  f.gamma_hat = hill(ts);
  f.c_hat = (static_cast<double>(ts.k) / static_cast<double>(ts.n)) *
            std::pow(ts.threshold, f.gamma_hat);
  f.x_hat = ts.threshold *
            std::pow(static_cast<double>(ts.k) / (static_cast<double>(ts.n) * p),
                     1.0 / f.gamma_hat);
  f.p = p;
  return f;
}

}  // namespace tailcr
