#pragma once

#include <span>
#include <vector>

#include "hetnet/analytic_settings.hpp"
#include "hetnet/core_model.hpp"

// Scenario-dispatching front door over UniformModel and NonUniformModel.

namespace hetnet {

/// Coverage P[SINR > T] for any scenario. Region-conditioned values are only
/// defined for the non-uniform scenarios; asking for them otherwise throws
/// std::invalid_argument.
double analytic_coverage(const NetworkConfig& cfg, double sinr_threshold, Region region = Region::Overall,
                         const AnalyticSettings& settings = {});

double analytic_throughput_ccdf(const NetworkConfig& cfg, double rate_bps, Region region = Region::Overall,
                                WarningLog* warnings = nullptr, const AnalyticSettings& settings = {});

/// Coverage curve over thresholds given in dB.
CcdfCurve analytic_coverage_curve(const NetworkConfig& cfg, std::span<const double> thresholds_db,
                                  Region region = Region::Overall, const AnalyticSettings& settings = {});

CcdfCurve analytic_throughput_curve(const NetworkConfig& cfg, std::span<const double> rates_bps,
                                    Region region = Region::Overall, WarningLog* warnings = nullptr,
                                    const AnalyticSettings& settings = {});

/// Smallest rate whose CCDF has dropped to ccdf_level (the (1 - level) quantile of the rate),
/// located by bisection on [lo, hi].
double analytic_rate_quantile(const NetworkConfig& cfg, double ccdf_level, double lo = 1e-5, double hi = 10.0,
                              WarningLog* warnings = nullptr);

}  // namespace hetnet
