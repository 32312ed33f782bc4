#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "a2r/degree_sequence.hpp"

namespace a2r::theory {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct TheoryConfig {
  double quad_abs_tol = 1e-10;  // absolute tolerance for adaptive quadrature
  double tail_cutoff = 40.0;    // [T, inf) tails handled via the E1 identity
};

enum class E1Method { Auto, Series, ContinuedFraction };

// Exponential integral E1(x) = int_x^inf e^-u/u du, x > 0.
// Two independent evaluators, cross-checked in the test suite:
//   series:             E1(x) = -gamma - ln x + sum (-1)^(k+1) x^k/(k k!)
//   continued fraction: E1(x) = e^-x / (x+1- 1/(x+3- 4/(x+5- ...)))  (Lentz)
// The production route uses the series for x <= 1, the fraction above.
double e1_series(double x);
double e1_continued_fraction(double x);
double e1(double x, E1Method method = E1Method::Auto);

// Intensity of the limiting Poisson process of large-cycle counts, in the
// window parametrization k = r n2/lne2:  lambda(r) = e^(-r/2) / (2r).
//
// Derivation from the exact cycle-count expectation: E[C_n(k)] =
// (1/2k) prod_{g<k} 2(n2-g)/(ell-2g-1) ~ e^(-k lne2/(2 n2))/(2k), so
// k = r n2/lne2 gives e^(-r/2)/(2r). Pinned by the exact identity
// int_0^inf r lambda(r) dr = 1 = lim E[C(n)] lne2/n2.
double lambda_intensity(double t);

// int_a^t lambda(r) dr = (E1(a/2) - E1(t/2)) / 2, for 0 < a <= t.
double poisson_mean(double a, double t, E1Method method = E1Method::Auto);

// CDF of Y2, the distributional limit of |C_2| lne2 / n:
//   F(a) = exp(-int_a^inf lambda(r) dr) = exp(-E1(a/2)/2).
double cdf_Y2(double a, E1Method method = E1Method::Auto);

// Adaptive-Simpson evaluation of int_a^t lambda(r) dr, the quadrature
// route checked against the E1 identity.
double integrate_lambda(double a, double t, double abs_tol = 1e-10);

// E[C(n)] = n2 / (lne2 + 1), exact for every degree sequence.
Rational expected_cyclic_vertices(const DegreeSequence& seq);

// E[C_n(k)] = binom(n2, k) 2^(k-1) (k-1)! prod_{g=0}^{k-1} 1/(ell-2g-1),
// exact; requires 1 <= k <= n2.
Rational expected_cycle_count(const DegreeSequence& seq, std::uint64_t k);

// Probability that the exploration started at a degree-1 vertex survives k
// steps, i.e. its first k partners are all fresh degree-2 vertices:
//   prod_{t=0}^{k-1} 2(n2-t) / (ell-2t-1),  exact; requires k <= n2.
// Surviving k steps means the line has at least k+2 vertices in total.
Rational line_survival(const DegreeSequence& seq, std::uint64_t k);

// Size scale of the largest components in the degree-1 regime:
// 2 n ln(n1) / n1 (natural log); requires n1 >= 2.
double lower_regime_prediction(std::uint64_t n, std::uint64_t n1);

}  // namespace a2r::theory
