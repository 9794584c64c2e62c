#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hetnet {

struct BinomialInterval {
  double estimate = 0.0;
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for k successes out of n (z = 1.96 gives 95%).
BinomialInterval wilson_interval(std::size_t successes, std::size_t n, double z = 1.96);

/// Fraction of samples strictly above each threshold.
std::vector<double> empirical_ccdf(std::span<const double> samples, std::span<const double> thresholds);

/// sup |F_n(x) - F(x)| over the sample; samples need not be sorted.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic one-sample KS critical value, c(alpha) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha = 0.01);

}  // namespace hetnet
