#pragma once

#include "hetnet/analytic_settings.hpp"
#include "hetnet/core_model.hpp"

// Baseline deployment: small cells form a homogeneous PPP over the whole
// plane (Uniform), or are absent (MacroOnly).

namespace hetnet {

struct AssociationProbabilities {
  double q1 = 1.0;
  double q2 = 0.0;
};

struct LoadedDensities {
  double macro = 0.0;
  double small = 0.0;
};

/// lambda_eq_1 = l1 + l2 (P2/P1)^(2/a), lambda_eq_2 = l1 (P1/P2)^(2/a) + l2, and the
/// same combinations of the loaded densities.
struct UniformEquivalentDensities {
  double lambda_eq_1 = 0.0;
  double lambda_eq_2 = 0.0;
  double lambda_eq_1_loaded = 0.0;
  double lambda_eq_2_loaded = 0.0;
};

class UniformModel {
 public:
  /// cfg.scenario must be Uniform or MacroOnly.
  explicit UniformModel(const NetworkConfig& cfg, AnalyticSettings settings = {});

  const NetworkConfig& config() const noexcept { return cfg_; }
  const AssociationProbabilities& association() const noexcept { return association_; }
  const LoadedDensities& loaded() const noexcept { return loaded_; }
  const UniformEquivalentDensities& equivalent() const noexcept { return equivalent_; }

  /// P[SINR > T | served by tier]; T is linear.
  double coverage_tier(Tier tier, double sinr_threshold) const;
  /// Tier mixture weighted by the association probabilities.
  double coverage(double sinr_threshold) const;
  /// P[R > rate] with R = W / (N + 1) log2(1 + SINR), mixed over tiers.
  double throughput_ccdf(double rate_bps, WarningLog* warnings = nullptr) const;
  double throughput_ccdf_tier(Tier tier, double rate_bps, WarningLog* warnings = nullptr) const;

 private:
  NetworkConfig cfg_;
  AnalyticSettings settings_;
  AssociationProbabilities association_;
  LoadedDensities loaded_;
  UniformEquivalentDensities equivalent_;
};

AssociationProbabilities association_probs_uniform(const NetworkConfig& cfg);
LoadedDensities loaded_densities_uniform(const NetworkConfig& cfg);
double coverage_uniform_tier(const NetworkConfig& cfg, Tier tier, double sinr_threshold);
double coverage_uniform(const NetworkConfig& cfg, double sinr_threshold);
double throughput_ccdf_uniform(const NetworkConfig& cfg, double rate_bps, WarningLog* warnings = nullptr);

}  // namespace hetnet
