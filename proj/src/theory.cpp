#include "a2r/theory.hpp"

#include <cmath>
#include <string>

#include "a2r/errors.hpp"

namespace a2r::theory {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

void require_positive(double x, const char* what) {
  if (!(x > 0.0))
    throw_error(errc::non_positive_argument, std::string(what) + " must be > 0");
}

}  // namespace

double e1_series(double x) {
  require_positive(x, "x");
  // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
  //       = -gamma - ln x - sum_{k>=1} u_k / k,  u_k = (-x)^k / k!
  double sum = 0.0;
  double u = 1.0;
  for (int k = 1; k < 1000; ++k) {
    u *= -x / k;
    const double term = -u / k;
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) + 1e-300) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

double e1_continued_fraction(double x) {
  require_positive(x, "x");
  // Modified Lentz on E1(x) = e^-x / (x+1 - 1/(x+3 - 4/(x+5 - 9/(...)))).
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (long i = 1; i < 20000000L; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h * std::exp(-x);
  }
  return h * std::exp(-x);  // converged to machine precision long before this
}

double e1(double x, E1Method method) {
  switch (method) {
    case E1Method::Series: return e1_series(x);
    case E1Method::ContinuedFraction: return e1_continued_fraction(x);
    case E1Method::Auto: break;
  }
  return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double lambda_intensity(double t) {
  require_positive(t, "t");
  return std::exp(-0.5 * t) / (2.0 * t);
}

double poisson_mean(double a, double t, E1Method method) {
  if (!(a > 0.0) || !(t >= a))
    throw_error(errc::bad_interval, "need 0 < a <= t");
  if (a == t) return 0.0;
  return 0.5 * (e1(0.5 * a, method) - e1(0.5 * t, method));
}

double cdf_Y2(double a, E1Method method) {
  require_positive(a, "a");
  return std::exp(-0.5 * e1(0.5 * a, method));
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Plain recursive adaptive Simpson; interval counts are tiny for this
// integrand, so recursion depth is no concern.
double adaptive(double a, double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = lambda_intensity(lm);
  const double frm = lambda_intensity(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  if (depth > 60 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_lambda(double a, double t, double abs_tol) {
  if (!(a > 0.0) || !(t >= a))
    throw_error(errc::bad_interval, "need 0 < a <= t");
  require_positive(abs_tol, "abs_tol");
  if (a == t) return 0.0;
  const double fa = lambda_intensity(a);
  const double fb = lambda_intensity(t);
  const double fm = lambda_intensity(0.5 * (a + t));
  const double whole = simpson(fa, fm, fb, t - a);
  return adaptive(a, t, fa, fm, fb, whole, abs_tol, 0);
}

Rational expected_cyclic_vertices(const DegreeSequence& seq) {
  return Rational(BigInt(seq.count(2)), BigInt(seq.ell_ne2() + 1));
}

Rational expected_cycle_count(const DegreeSequence& seq, std::uint64_t k) {
  const std::uint64_t n2 = seq.count(2);
  if (k < 1 || k > n2)
    throw_error(errc::out_of_range,
                "k must be in [1, n2]; got k=" + std::to_string(k) +
                    ", n2=" + std::to_string(n2));
  // binom(n2, k) * 2^(k-1) * (k-1)! * prod_{g=0}^{k-1} 1/(ell-2g-1)
  BigInt num = 1;
  for (std::uint64_t g = 0; g < k; ++g) num *= BigInt(n2 - g);  // n2 falling k
  num *= BigInt(1) << (k - 1);
  BigInt den = k;  // binom * (k-1)! = (n2 falling k) / k
  for (std::uint64_t g = 0; g < k; ++g) den *= BigInt(seq.ell() - 2 * g - 1);
  return Rational(num, den);
}

Rational line_survival(const DegreeSequence& seq, std::uint64_t k) {
  if (seq.count(1) == 0)
    throw_error(errc::out_of_range, "sequence has no degree-1 vertices");
  const std::uint64_t n2 = seq.count(2);
  if (k > n2)
    throw_error(errc::out_of_range, "k=" + std::to_string(k) + " exceeds n2=" +
                                        std::to_string(n2));
  BigInt num = 1, den = 1;
  for (std::uint64_t t = 0; t < k; ++t) {
    num *= BigInt(2 * (n2 - t));
    den *= BigInt(seq.ell() - 2 * t - 1);
  }
  return Rational(num, den);
}

double lower_regime_prediction(std::uint64_t n, std::uint64_t n1) {
  if (n1 < 2) throw_error(errc::out_of_range, "n1 must be >= 2");
  return 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n1)) /
         static_cast<double>(n1);
}

}  // namespace a2r::theory
