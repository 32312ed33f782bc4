#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "a2r/errors.hpp"
#include "a2r/rng.hpp"
#include "a2r/stats.hpp"

using namespace a2r;

TEST_CASE("mean and standard error") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const auto m = stats::mean_se(xs);
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.se == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK_THROWS_AS(stats::mean_se({}), error);
}

TEST_CASE("median, even and odd") {
  CHECK(stats::median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(stats::median({4.0, 1.0, 3.0, 2.0}) == doctest::Approx(2.5));
}

TEST_CASE("ks: single point at the reference median is 0.5") {
  const std::vector<double> one{0.0};
  CHECK(stats::ks_distance(one, [](double) { return 0.5; }) == doctest::Approx(0.5));
}

TEST_CASE("ks: inverse-cdf grid sample sits within 1/(2n)") {
  auto cdf = [](double x) { return x; };  // uniform on [0,1]
  const std::size_t n = 1000;
  std::vector<double> sample(n);
  for (std::size_t i = 0; i < n; ++i)
    sample[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  CHECK(stats::ks_distance(sample, cdf) <= 0.5 / n + 1e-12);
}

TEST_CASE("ks against the sample's own empirical cdf is one jump at most") {
  // the two-sided statistic evaluates the reference at the jump points, so
  // against its own empirical CDF it reports exactly one discretization
  // quantum (1/n for distinct points), never more
  std::vector<double> sample{0.1, 0.4, 0.7, 0.9, 2.0};
  std::sort(sample.begin(), sample.end());
  auto empirical = [&sample](double x) {
    const auto it = std::upper_bound(sample.begin(), sample.end(), x);
    return static_cast<double>(it - sample.begin()) / static_cast<double>(sample.size());
  };
  CHECK(stats::ks_distance(sample, empirical) <= 1.0 / sample.size() + 1e-12);
  CHECK_THROWS_AS(stats::ks_distance({}, empirical), error);
}

TEST_CASE("factorial moments") {
  const std::vector<std::uint64_t> zeros{0, 0, 0};
  CHECK(stats::factorial_moment(zeros, 1) == 0.0);
  CHECK(stats::factorial_moment(zeros, 3) == 0.0);
  const std::vector<std::uint64_t> twos{2, 2};
  CHECK(stats::factorial_moment(twos, 2) == doctest::Approx(2.0));
  CHECK(stats::factorial_moment(twos, 1) == doctest::Approx(2.0));
  CHECK(stats::factorial_moment(twos, 3) == doctest::Approx(0.0));
  CHECK_THROWS_AS(stats::factorial_moment(twos, 0), error);
}

TEST_CASE("jackknife SE of a mean-type statistic matches the plain SE") {
  const std::vector<std::uint64_t> counts{0, 1, 2, 0, 3, 1, 1, 0, 2, 5};
  std::vector<double> values(counts.begin(), counts.end());
  const double plain = stats::mean_se(values).se;
  const double jack = stats::factorial_moment_jackknife_se(counts, 1);
  CHECK(jack == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("chi-square p-values behave") {
  CHECK(stats::chi_square_pvalue(0.0, 5.0) == doctest::Approx(1.0));
  // P(Chi2_1 > 3.841) ~ 0.05
  CHECK(stats::chi_square_pvalue(3.841458820694124, 1.0) == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(stats::chi_square_pvalue(100.0, 1.0) < 1e-20);

  // uniform draws against the uniform law: p should not be tiny
  rng::Xoshiro256StarStar gen(4242);
  std::vector<std::uint64_t> observed(10, 0);
  for (int i = 0; i < 100000; ++i) ++observed[gen.bounded(10)];
  const std::vector<double> probabilities(10, 0.1);
  CHECK(stats::chi_square_gof_pvalue(probabilities, observed) > 1e-3);

  // grossly non-uniform counts: p collapses
  std::vector<std::uint64_t> skewed(10, 10);
  skewed[0] = 1000;
  CHECK(stats::chi_square_gof_pvalue(probabilities, skewed) < 1e-12);
}

TEST_CASE("chi-square homogeneity") {
  const std::vector<std::uint64_t> a{100, 200, 300};
  CHECK(stats::chi_square_homogeneity_pvalue(a, a) == doctest::Approx(1.0));
  const std::vector<std::uint64_t> b{300, 200, 100};
  CHECK(stats::chi_square_homogeneity_pvalue(a, b) < 1e-12);
  // same law, two independent draws
  rng::Xoshiro256StarStar gen(7);
  std::vector<std::uint64_t> x(6, 0), y(6, 0);
  for (int i = 0; i < 60000; ++i) ++x[gen.bounded(6)];
  for (int i = 0; i < 60000; ++i) ++y[gen.bounded(6)];
  CHECK(stats::chi_square_homogeneity_pvalue(x, y) > 1e-3);
}
