#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace a2r::stats {

struct MeanSE {
  double mean = 0.0;
  double se = 0.0;
  std::uint64_t n = 0;
};

MeanSE mean_se(std::span<const double> sample);

double median(std::vector<double> sample);

// Two-sided sup distance between the empirical CDF of a sorted sample and
// a reference CDF, using both empirical limits at each point.
double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf);

// Mean of x(x-1)...(x-h+1) over the sample, h >= 1.
double factorial_moment(std::span<const std::uint64_t> counts, unsigned h);

// Leave-one-out jackknife standard error of the factorial-moment estimate.
double factorial_moment_jackknife_se(std::span<const std::uint64_t> counts, unsigned h);

// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
double chi_square_pvalue(double statistic, double df);

// Goodness of fit of observed counts against given class probabilities
// (df = #classes - 1).
double chi_square_gof_pvalue(std::span<const double> probabilities,
                             std::span<const std::uint64_t> observed);

// 2 x K homogeneity test for two count vectors over the same classes.
double chi_square_homogeneity_pvalue(std::span<const std::uint64_t> a,
                                     std::span<const std::uint64_t> b);

}  // namespace a2r::stats
