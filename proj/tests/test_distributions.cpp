#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tailcr/distributions.hpp"
#include "tailcr/rng.hpp"

using namespace tailcr;

TEST_CASE("closed-form quantiles hit hand-computed values") {
  CHECK(upper_quantile(make_frechet(1.0), 0.01) ==
        doctest::Approx(oracles::kFrechet1Q001).epsilon(1e-13));
  // burr(2,3): 1-F(x) = (1+x)^(-2), so 1-F(9) = 1/100.
  CHECK(upper_quantile(make_burr(2.0, 3.0), 0.01) ==
        doctest::Approx(oracles::kBurr23Q001).epsilon(1e-13));
  // burr(1,2): 1-F(x) = 1/(1+x), so the upper 0.01 quantile is 99.
  CHECK(upper_quantile(make_burr(1.0, 2.0), 0.01) == doctest::Approx(99.0).epsilon(1e-13));
  // burr(1,3): 1-F(x) = (1+x^2)^(-1/2); at p = 0.5 that gives x = sqrt(3).
  CHECK(upper_quantile(make_burr(1.0, 3.0), 0.5) ==
        doctest::Approx(oracles::kSqrt3).epsilon(1e-13));
}

TEST_CASE("cdf values match the same closed forms") {
  CHECK(cdf(make_burr(2.0, 3.0), 9.0) == doctest::Approx(0.99).epsilon(1e-14));
  CHECK(cdf(make_burr(1.0, 2.0), 99.0) == doctest::Approx(0.99).epsilon(1e-14));
  CHECK(cdf(make_frechet(1.0), oracles::kFrechet1Q001) ==
        doctest::Approx(0.99).epsilon(1e-13));
  CHECK(cdf(make_frechet(2.0), 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("quantile and cdf are mutual inverses across both families") {
  const std::vector<HeavyDist> dists = {make_burr(1.0, 2.0), make_burr(0.5, 4.0),
                                        make_burr(2.0, 2.5), make_frechet(1.0),
                                        make_frechet(0.7), make_frechet(3.0)};
  for (const auto& d : dists) {
    for (double p : {1e-6, 1e-3, 0.01, 0.1, 0.5, 0.9, 0.999}) {
      const double x = upper_quantile(d, p);
      CHECK(x > 0.0);
      CHECK(1.0 - cdf(d, x) == doctest::Approx(p).epsilon(1e-10));
    }
  }
}

TEST_CASE("family constructors validate their parameters") {
  CHECK_THROWS_AS(make_burr(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_burr(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_burr(2.0, 2.0), std::invalid_argument);  // requires a < b
  CHECK_THROWS_AS(make_burr(3.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_frechet(0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_frechet(-2.0), std::invalid_argument);
  CHECK_NOTHROW(make_burr(1.0, 2.0));
  CHECK_NOTHROW(make_frechet(1.4));
}

TEST_CASE("sampling is deterministic in the seed and consumes the stream") {
  const HeavyDist d = make_burr(1.0, 2.0);
  UniformStream u1(42), u2(42), u3(43);
  const auto s1 = sample(d, 100, u1);
  const auto s2 = sample(d, 100, u2);
  const auto s3 = sample(d, 100, u3);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  for (double v : s1) CHECK(v > 0.0);
}

TEST_CASE("probability transform of samples is uniform (KS check)") {
  for (const auto& d : {make_burr(1.0, 2.0), make_frechet(1.0), make_burr(2.0, 3.0)}) {
    UniformStream u(2026);
    const auto s = sample(d, 2000, u);
    std::vector<double> pit(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) pit[i] = cdf(d, s[i]);
    CHECK(testsupport::ks_uniform(pit) < 0.05);
  }
}

TEST_CASE("second-order tail description carries the documented exponents") {
  const SecondOrder burr12 = second_order(make_burr(1.0, 2.0));
  CHECK(burr12.gamma == doctest::Approx(1.0));
  CHECK(burr12.rho == doctest::Approx(-1.0));
  CHECK(burr12.A(20.0) == doctest::Approx(1.0 / 20.0).epsilon(1e-12));

  const SecondOrder burr140 = second_order(make_burr(1.0, 40.0));
  CHECK(burr140.gamma == doctest::Approx(1.0));
  CHECK(burr140.rho == doctest::Approx(-39.0));

  const SecondOrder fr = second_order(make_frechet(1.0));
  CHECK(fr.gamma == doctest::Approx(1.0));
  CHECK(fr.rho == doctest::Approx(-1.0));
  CHECK(fr.A(10.0) == doctest::Approx(1.0 / 20.0).epsilon(1e-12));

  const SecondOrder fr2 = second_order(make_frechet(2.0));
  CHECK(fr2.gamma == doctest::Approx(2.0));
  CHECK(fr2.A(10.0) == doctest::Approx(1.0 / 40.0).epsilon(1e-12));
}

TEST_CASE("dist_name labels both families") {
  CHECK(std::string(dist_name(DistKind::burr)) == "burr");
  CHECK(std::string(dist_name(DistKind::frechet)) == "frechet");
}
