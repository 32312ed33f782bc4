#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "a2r/components.hpp"
#include "a2r/errors.hpp"
#include "a2r/theory.hpp"
#include "support/test_helpers.hpp"

using namespace a2r;
using theory::Rational;

// Reference values computed with mpmath at 30 digits.
namespace ref {
constexpr double e1_0_005 = 4.7260954585844430493;
constexpr double e1_0_05 = 2.4678984885099743696;
constexpr double e1_0_1 = 1.8229239584193906661;
constexpr double e1_0_25 = 1.0442826344437381945;
constexpr double e1_0_5 = 0.55977359477616081175;
constexpr double e1_1 = 0.21938393439552027368;
constexpr double e1_2_5 = 0.024914917870269735496;
constexpr double e1_10 = 4.1569689296853242774e-6;
constexpr double lambda_0_5 = 0.77880078307140486825;
constexpr double lambda_1 = 0.3032653298563167118;
constexpr double cdf_1 = 0.75586930299210795128;
constexpr double cdf_0_1 = 0.29114051927504058563;
constexpr double mu_1_2 = 0.17019483019032026903;
constexpr double mu_02_20 = 0.8017700120119351962;
}  // namespace ref

TEST_CASE("E1 series and continued fraction hit the references") {
  for (const auto& [x, v] : std::vector<std::pair<double, double>>{
           {0.005, ref::e1_0_005},
           {0.05, ref::e1_0_05},
           {0.1, ref::e1_0_1},
           {0.25, ref::e1_0_25},
           {0.5, ref::e1_0_5},
           {1.0, ref::e1_1},
           {2.5, ref::e1_2_5},
           {10.0, ref::e1_10}}) {
    CHECK(theory::e1_series(x) == doctest::Approx(v).epsilon(1e-11));
    CHECK(theory::e1_continued_fraction(x) == doctest::Approx(v).epsilon(1e-10));
    CHECK(theory::e1(x) == doctest::Approx(v).epsilon(1e-11));
  }
  CHECK_THROWS_AS(theory::e1(0.0), error);
  CHECK_THROWS_AS(theory::e1(-1.0), error);
}

TEST_CASE("lambda intensity") {
  CHECK(theory::lambda_intensity(0.5) == doctest::Approx(ref::lambda_0_5).epsilon(1e-14));
  CHECK(theory::lambda_intensity(1.0) == doctest::Approx(ref::lambda_1).epsilon(1e-14));
  CHECK(std::isfinite(theory::lambda_intensity(1e-12)));
  CHECK_THROWS_AS(theory::lambda_intensity(0.0), error);
  CHECK_THROWS_AS(theory::lambda_intensity(-0.5), error);
}

TEST_CASE("poisson_mean: identity value, empty interval, additivity") {
  CHECK(theory::poisson_mean(1.0, 2.0) == doctest::Approx(ref::mu_1_2).epsilon(1e-11));
  CHECK(theory::poisson_mean(0.2, 2.0) == doctest::Approx(ref::mu_02_20).epsilon(1e-11));
  CHECK(theory::poisson_mean(0.7, 0.7) == 0.0);
  const double whole = theory::poisson_mean(0.2, 2.0);
  const double split = theory::poisson_mean(0.2, 0.7) + theory::poisson_mean(0.7, 2.0);
  CHECK(std::abs(whole - split) < 1e-9);
  CHECK_THROWS_AS(theory::poisson_mean(0.0, 1.0), error);
  CHECK_THROWS_AS(theory::poisson_mean(2.0, 1.0), error);
}

TEST_CASE("cdf_Y2: references, monotonicity, range, tail consistency") {
  CHECK(theory::cdf_Y2(1.0) == doctest::Approx(ref::cdf_1).epsilon(1e-11));
  CHECK(theory::cdf_Y2(0.1) == doctest::Approx(ref::cdf_0_1).epsilon(1e-11));

  double prev = 0.0;
  for (double a = 0.01; a < 30.0; a *= 1.5) {
    const double f = theory::cdf_Y2(a);
    CHECK(f > 0.0);
    CHECK(f < 1.0);
    CHECK(f > prev);
    prev = f;
  }
  CHECK(theory::cdf_Y2(500.0) == doctest::Approx(1.0).epsilon(1e-9));

  // F(a) = exp(-mu(a,T)) * exp(-tail(T)) with tail(T) = E1(T/2)/2
  for (const double a : {0.05, 0.3, 1.0, 2.0}) {
    const double T = 30.0;
    const double composed =
        std::exp(-theory::poisson_mean(a, T)) * std::exp(-0.5 * theory::e1(0.5 * T));
    CHECK(std::abs(theory::cdf_Y2(a) - composed) < 1e-8);
  }

  // P(Poi(mu(a,t)) = 0) increases to F(a) as t grows
  const double a = 0.4;
  double prev_zero = 0.0;
  for (const double t : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    const double zero = std::exp(-theory::poisson_mean(a, t));
    CHECK(zero > theory::cdf_Y2(a) - 1e-12);
    if (prev_zero > 0) CHECK(zero <= prev_zero + 1e-15);
    prev_zero = zero;
  }
  CHECK(std::abs(prev_zero - theory::cdf_Y2(a)) < 1e-7);

  CHECK_THROWS_AS(theory::cdf_Y2(0.0), error);
}

TEST_CASE("both E1 routes give the same cdf on the acceptance grid") {
  for (const double a : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double s = theory::cdf_Y2(a, theory::E1Method::Series);
    const double c = theory::cdf_Y2(a, theory::E1Method::ContinuedFraction);
    CHECK(std::abs(s - c) < 1e-9);
  }
}

TEST_CASE("adaptive quadrature agrees with the E1 identity") {
  for (const auto& [a, t] : std::vector<std::pair<double, double>>{
           {0.2, 2.0}, {1.0, 2.0}, {0.05, 10.0}, {3.0, 4.0}}) {
    const double quad = theory::integrate_lambda(a, t, 1e-10);
    CHECK(std::abs(quad - theory::poisson_mean(a, t)) < 1e-8);
  }
}

TEST_CASE("expected cyclic vertices is n2/(lne2+1) and matches enumeration") {
  CHECK(theory::expected_cyclic_vertices(DegreeSequence::build_upper(9970, {{3, 30}})) ==
        Rational(9970, 91));
  CHECK(theory::expected_cyclic_vertices(DegreeSequence::build_lower(2, 2)) ==
        Rational(2, 3));
  CHECK(theory::expected_cyclic_vertices(DegreeSequence::build_lower(0, 2)) == Rational(0));

  // enumeration oracle: average C(n) over all matchings, exact
  for (const auto& seq :
       {DegreeSequence::build_lower(2, 2), DegreeSequence::build_upper(2, {{4, 1}}),
        DegreeSequence::build_upper(3, {})}) {
    Rational total(0);
    std::uint64_t count = 0;
    for (const auto& g : a2r_test::all_matchings(seq)) {
      total += analyze(g).cyclic_vertices;
      ++count;
    }
    CHECK(total / count == theory::expected_cyclic_vertices(seq));
  }
}

TEST_CASE("expected cycle counts: frozen values and enumeration oracle") {
  const auto pure2 = DegreeSequence::build_upper(2, {});
  CHECK(theory::expected_cycle_count(pure2, 1) == Rational(2, 3));
  CHECK(theory::expected_cycle_count(pure2, 2) == Rational(2, 3));

  const auto pure3 = DegreeSequence::build_upper(3, {});
  CHECK(theory::expected_cycle_count(pure3, 3) == Rational(8, 15));

  const auto upper = DegreeSequence::build_upper(2, {{4, 1}});
  CHECK(theory::expected_cycle_count(upper, 1) == Rational(2, 7));
  CHECK(theory::expected_cycle_count(upper, 2) == Rational(2, 35));

  CHECK_THROWS_AS(theory::expected_cycle_count(pure2, 3), error);
  CHECK_THROWS_AS(theory::expected_cycle_count(pure2, 0), error);

  for (const auto& seq :
       {DegreeSequence::build_lower(3, 2), DegreeSequence::build_upper(4, {})}) {
    std::map<std::uint64_t, Rational> sums;
    std::uint64_t count = 0;
    for (const auto& g : a2r_test::all_matchings(seq)) {
      ++count;
      for (const auto& [k, c] : analyze(g).cycle_hist) sums[k] += c;
    }
    for (std::uint64_t k = 1; k <= seq.count(2); ++k) {
      const Rational expected = sums.count(k) ? sums[k] / count : Rational(0);
      CHECK(theory::expected_cycle_count(seq, k) == expected);
    }
  }
}

TEST_CASE("sum of k E[C_n(k)] telescopes to the cyclic-vertex expectation") {
  for (const auto& seq :
       {DegreeSequence::build_upper(6, {}), DegreeSequence::build_lower(5, 2),
        DegreeSequence::build_upper(4, {{4, 1}}), DegreeSequence::build_upper(30, {{3, 4}})}) {
    Rational sum(0);
    for (std::uint64_t k = 1; k <= seq.count(2); ++k)
      sum += Rational(k) * theory::expected_cycle_count(seq, k);
    CHECK(sum == theory::expected_cyclic_vertices(seq));
  }
}

TEST_CASE("line survival: boundary, frozen values, monotonicity") {
  const auto seq = DegreeSequence::build_lower(2, 2);
  CHECK(theory::line_survival(seq, 0) == Rational(1));
  CHECK(theory::line_survival(seq, 1) == Rational(4, 5));
  CHECK(theory::line_survival(seq, 2) == Rational(8, 15));
  CHECK_THROWS_AS(theory::line_survival(seq, 3), error);
  CHECK_THROWS_AS(theory::line_survival(DegreeSequence::build_upper(4, {}), 1), error);

  const auto big = DegreeSequence::build_lower(1000, 10);
  Rational prev(2);
  for (std::uint64_t k = 0; k <= 20; ++k) {
    const Rational s = theory::line_survival(big, k);
    CHECK(s <= prev);
    prev = s;
  }
}

TEST_CASE("lower-regime prediction") {
  CHECK(theory::lower_regime_prediction(1000000, 1000) ==
        doctest::Approx(13815.510557964274).epsilon(1e-12));
  CHECK(theory::lower_regime_prediction(2000000, 1000) ==
        doctest::Approx(2 * 13815.510557964274).epsilon(1e-12));
  CHECK(theory::lower_regime_prediction(100, 100) ==
        doctest::Approx(2.0 * std::log(100.0)).epsilon(1e-12));
  CHECK_THROWS_AS(theory::lower_regime_prediction(100, 1), error);
}
