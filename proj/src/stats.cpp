#include "a2r/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "a2r/errors.hpp"

namespace a2r::stats {

MeanSE mean_se(std::span<const double> sample) {
  if (sample.empty()) throw_error(errc::empty_sample, "mean of nothing");
  const std::uint64_t n = sample.size();
  double mean = 0.0;
  for (const double x : sample) mean += x;
  mean /= static_cast<double>(n);
  if (n == 1) return {mean, 0.0, n};
  double ss = 0.0;
  for (const double x : sample) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

double median(std::vector<double> sample) {
  if (sample.empty()) throw_error(errc::empty_sample, "median of nothing");
  const std::size_t mid = sample.size() / 2;
  std::nth_element(sample.begin(), sample.begin() + mid, sample.end());
  if (sample.size() % 2 == 1) return sample[mid];
  const double hi = sample[mid];
  const double lo = *std::max_element(sample.begin(), sample.begin() + mid);
  return 0.5 * (lo + hi);
}

double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf) {
  if (sorted_sample.empty()) throw_error(errc::empty_sample, "KS of nothing");
  const double n = static_cast<double>(sorted_sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    const double f = cdf(sorted_sample[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double factorial_moment(std::span<const std::uint64_t> counts, unsigned h) {
  if (h < 1) throw_error(errc::out_of_range, "moment order must be >= 1");
  if (counts.empty()) throw_error(errc::empty_sample, "factorial moment of nothing");
  double sum = 0.0;
  for (const std::uint64_t x : counts) {
    double p = 1.0;
    for (unsigned j = 0; j < h; ++j) p *= static_cast<double>(x) - j;
    sum += p;
  }
  return sum / static_cast<double>(counts.size());
}

double factorial_moment_jackknife_se(std::span<const std::uint64_t> counts, unsigned h) {
  if (h < 1) throw_error(errc::out_of_range, "moment order must be >= 1");
  const std::size_t r = counts.size();
  if (r < 2) return 0.0;
  std::vector<double> f(r);
  double total = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    double p = 1.0;
    for (unsigned j = 0; j < h; ++j) p *= static_cast<double>(counts[i]) - j;
    f[i] = p;
    total += p;
  }
  // Leave-one-out estimates theta_(i) = (total - f_i)/(r-1).
  double mean_loo = 0.0;
  for (std::size_t i = 0; i < r; ++i) mean_loo += (total - f[i]) / (r - 1);
  mean_loo /= static_cast<double>(r);
  double ss = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    const double loo = (total - f[i]) / (r - 1);
    ss += (loo - mean_loo) * (loo - mean_loo);
  }
  return std::sqrt(ss * static_cast<double>(r - 1) / static_cast<double>(r));
}

double chi_square_pvalue(double statistic, double df) {
  if (!(df > 0.0)) throw_error(errc::out_of_range, "df must be > 0");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * df, 0.5 * statistic);
}

double chi_square_gof_pvalue(std::span<const double> probabilities,
                             std::span<const std::uint64_t> observed) {
  if (probabilities.size() != observed.size() || probabilities.empty())
    throw_error(errc::bad_config, "probability/count size mismatch");
  std::uint64_t total = 0;
  for (const std::uint64_t o : observed) total += o;
  if (total == 0) throw_error(errc::empty_sample, "no observations");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(total);
    if (expected <= 0.0)
      throw_error(errc::bad_config, "class with zero probability observed");
    const double diff = static_cast<double>(observed[i]) - expected;
    stat += diff * diff / expected;
  }
  return chi_square_pvalue(stat, static_cast<double>(observed.size() - 1));
}

double chi_square_homogeneity_pvalue(std::span<const std::uint64_t> a,
                                     std::span<const std::uint64_t> b) {
  if (a.size() != b.size() || a.empty())
    throw_error(errc::bad_config, "count vector size mismatch");
  double na = 0.0, nb = 0.0;
  for (const std::uint64_t x : a) na += static_cast<double>(x);
  for (const std::uint64_t x : b) nb += static_cast<double>(x);
  if (na == 0.0 || nb == 0.0) throw_error(errc::empty_sample, "empty margin");
  const double total = na + nb;
  double stat = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0.0) continue;  // class absent from both samples
    ++used;
    const double ea = col * na / total;
    const double eb = col * nb / total;
    stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  if (used < 2) return 1.0;
  return chi_square_pvalue(stat, static_cast<double>(used - 1));
}

}  // namespace a2r::stats
