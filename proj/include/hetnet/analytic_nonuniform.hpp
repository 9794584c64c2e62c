#pragma once

#include <functional>
#include <limits>

#include "hetnet/analytic_settings.hpp"
#include "hetnet/core_model.hpp"

// Non-uniform small-cell deployment: small cells only exist farther than D
// from every macro site. Inside the model, lambda_2 always denotes the
// small-cell density in the outer region (EffectiveScenarioDensity), which is
// the only place Scenario-I and Scenario-II differ.

namespace hetnet {

enum class DistanceRegion { Inner, OuterTier1, OuterTier2 };

/// Distance from the typical user to its serving BS, conditioned on the
/// region (and, outside, on the serving tier).
struct ServingDistancePdf {
  DistanceRegion region = DistanceRegion::Inner;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  /// Branch point (P2/P1)^(1/alpha) D of the OuterTier2 density; NaN elsewhere.
  double breakpoint = std::numeric_limits<double>::quiet_NaN();
  std::function<double(double)> density;
  std::function<double(double)> cdf;

  double operator()(double x) const { return density(x); }
};

/// Association probabilities and loaded densities of the non-uniform deployment.
DerivedDensities derive_densities(const NetworkConfig& cfg);

class NonUniformModel {
 public:
  /// cfg.scenario must be NonUniformI or NonUniformII.
  explicit NonUniformModel(const NetworkConfig& cfg, AnalyticSettings settings = {});

  const NetworkConfig& config() const noexcept { return cfg_; }
  double outer_small_density() const noexcept { return lambda_small_; }
  const DerivedDensities& derived() const noexcept { return derived_; }
  /// Normalisation of the OuterTier2 serving-distance density.
  double constant_m() const noexcept { return constant_m_; }
  const RegionProbabilities& regions() const noexcept { return regions_; }

  ServingDistancePdf serving_distance_pdf(DistanceRegion region) const;

  // Coverage; thresholds are linear SINR values.
  double coverage_inner(double sinr_threshold) const;
  double coverage_outer_tier1(double sinr_threshold) const;
  double coverage_outer_tier2(double sinr_threshold) const;
  double coverage_outer(double sinr_threshold) const;
  double coverage_overall(double sinr_threshold) const;

  // Rate CCDFs, P[R > rate].
  double throughput_ccdf_inner(double rate_bps, WarningLog* warnings = nullptr) const;
  double throughput_ccdf_outer(double rate_bps, WarningLog* warnings = nullptr) const;
  double throughput_ccdf_overall(double rate_bps, WarningLog* warnings = nullptr) const;

 private:
  void require_inner_region() const;

  NetworkConfig cfg_;
  AnalyticSettings settings_;
  double lambda_small_ = 0.0;
  double k_ = 0.0;                // (P2/P1)^(2/alpha)
  double lambda_eq_macro_ = 0.0;  // l1 + l2 k
  RegionProbabilities regions_;
  DerivedDensities derived_;
  double constant_m_ = 1.0;
};

}  // namespace hetnet
