#include "hetnet/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

BinomialInterval wilson_interval(std::size_t successes, std::size_t n, double z) {
  if (n == 0) throw std::invalid_argument("wilson_interval: no trials");
  if (successes > n) throw std::invalid_argument("wilson_interval: successes exceed trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {p, std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::vector<double> empirical_ccdf(std::span<const double> samples, std::span<const double> thresholds) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(thresholds.size());
  const double n = static_cast<double>(sorted.size());
  for (double t : thresholds) {
    if (sorted.empty()) {
      out.push_back(0.0);
      continue;
    }
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
    out.push_back(static_cast<double>(above) / n);
  }
  return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical_value: bad arguments");
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace hetnet
