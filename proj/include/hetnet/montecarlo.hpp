#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hetnet/core_model.hpp"
#include "hetnet/spatial_grid.hpp"

// Monte Carlo reference simulator. Every trial draws a fresh network in a disk
// around the typical user at the origin and records what that user sees.

namespace hetnet {

struct SimSettings {
  double window_radius_m = 0.0;  // 0 picks sqrt(500 / (pi l1)), about 500 macro sites
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned parallel_streams = 1;

  double resolved_window(const NetworkConfig& cfg) const;
  /// Throws ConfigError if the window is smaller than 5 max(D, 1/sqrt(pi l1)).
  void validate(const NetworkConfig& cfg) const;
};

struct NetworkRealization {
  double window_radius_m = 0.0;
  std::vector<Point2> macro_points;
  std::vector<Point2> small_points;
  std::vector<Point2> small_parent_points;  // before hole carving
  /// users[0] is the typical user at the origin.
  std::vector<Point2> user_points;

  // Filled by associate_and_load.
  std::vector<std::uint32_t> macro_load;
  std::vector<std::uint32_t> small_load;
  std::vector<Tier> user_tier;
  std::vector<std::uint32_t> user_serving;

  bool associated() const noexcept { return user_tier.size() == user_points.size() && !user_points.empty(); }
};

/// Independent generator for (seed, trial, purpose); purpose 0 is geometry, 1 is fading.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t purpose);

NetworkRealization sample_realization(const NetworkConfig& cfg, const SimSettings& sim, std::uint64_t trial_index);

/// Max average received power association, P_i r^-alpha, ties to the macro tier.
NetworkRealization associate_and_load(NetworkRealization real, const NetworkConfig& cfg);

/// Rayleigh-faded SINR of the typical user; only loaded BSs other than the server interfere.
double sample_sinr(const NetworkRealization& real, const NetworkConfig& cfg, std::mt19937_64& rng);

/// P[SINR > T] for the typical user given the geometry and loads, fading averaged out exactly.
double conditional_coverage(const NetworkRealization& real, const NetworkConfig& cfg, double sinr_threshold);

/// The same network seen through the disk of the given radius; association is cleared.
NetworkRealization restrict_window(const NetworkRealization& real, double radius);

struct TrialOutcome {
  double sinr = 0.0;
  double rate_bps = 0.0;
  Tier tier = Tier::Macro;
  bool inner = false;
  double serving_distance = 0.0;
  double nearest_macro = 0.0;
  double nearest_small = 0.0;  // +inf when there is no small BS
  std::uint32_t serving_load = 1;
  std::size_t small_parent_count = 0;
  std::size_t small_kept_count = 0;
};

/// Runs sim.trials trials (parallel, results in trial order).
std::vector<TrialOutcome> run_trials(const NetworkConfig& cfg, const SimSettings& sim);
TrialOutcome run_trial(const NetworkConfig& cfg, const SimSettings& sim, std::uint64_t trial_index);

/// Overall curve plus the curves conditioned on the origin's region. A region
/// that received no trials has an empty curve.
struct RegionalCurves {
  CcdfCurve overall;
  CcdfCurve inner;
  CcdfCurve outer;
};

RegionalCurves coverage_curves(std::span<const TrialOutcome> outcomes, const NetworkConfig& cfg,
                               std::span<const double> thresholds_db);
RegionalCurves throughput_curves(std::span<const TrialOutcome> outcomes, const NetworkConfig& cfg,
                                 std::span<const double> rates_bps);

RegionalCurves estimate_coverage_ccdf(const NetworkConfig& cfg, const SimSettings& sim,
                                      std::span<const double> thresholds_db);
RegionalCurves estimate_throughput_ccdf(const NetworkConfig& cfg, const SimSettings& sim,
                                        std::span<const double> rates_bps);

/// Worker count actually used: parallel_streams capped by HETNET_SG_THREADS and the trial count.
unsigned effective_threads(const SimSettings& sim);

}  // namespace hetnet
