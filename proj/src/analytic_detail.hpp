#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

#include "hetnet/analytic_settings.hpp"
#include "hetnet/core_model.hpp"

namespace hetnet::detail {

/// 2^((n + 1) rate / W) - 1: the SINR a user needs when n others share the band.
double threshold_for_rate(std::size_t n, double rate_bps, double bandwidth_hz);

/// (P_small / P_macro)^(2/alpha).
double power_ratio_factor(const NetworkConfig& cfg);

/// sum_n pmf_users_sharing_cell(n; lambda_users, lambda_eq) * coverage(threshold_for_rate(n)).
double rate_series(const NetworkConfig& cfg, double lambda_eq, double rate_bps, const SeriesSettings& settings,
                   WarningLog* warnings, const char* what, const std::function<double(double)>& coverage);

/// Upper integration limit for integrands carrying exp(-pi c (x^2 - x0^2)): the point where
/// that exponent reaches settings.gaussian_cutoff.
double gaussian_cutoff_radius(double x0, double c, const AnalyticSettings& settings);

/// x^alpha with the alpha = 4 case done by multiplication.
inline double pow_alpha(double x, double alpha) {
  if (alpha == 4.0) {
    const double x2 = x * x;
    return x2 * x2;
  }
  return std::pow(x, alpha);
}

}  // namespace hetnet::detail
