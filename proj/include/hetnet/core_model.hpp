#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Shared configuration and result types. Everything inside the library is
// SI: meters, watts, points per square meter. Decibel quantities only appear
// in NetworkConfig fields and at the CLI/CSV boundary.

namespace hetnet {

enum class Scenario { MacroOnly, Uniform, NonUniformI, NonUniformII };

enum class Tier { Macro = 1, Small = 2 };

/// Where the typical user sits relative to the macro exclusion disks.
enum class Region { Overall, Inner, Outer };

enum class Method { Analytic, MonteCarlo };

std::string_view to_string(Scenario s) noexcept;
std::string_view to_string(Region r) noexcept;
std::string_view to_string(Method m) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name);
std::optional<Method> parse_method(std::string_view name);

bool is_non_uniform(Scenario s) noexcept;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unit conversions.
double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;
constexpr double per_km2(double count) noexcept { return count * 1e-6; }

struct NetworkConfig {
  double p_tx_macro = 46.0;           // dBm
  double p_tx_small = 20.0;           // dBm
  double path_loss_exponent = 4.0;    // alpha, > 2
  double path_loss_const_db = -34.0;  // L0 at 1 m
  double lambda_macro = per_km2(1.0);
  double lambda_small_nominal = per_km2(10.0);
  double lambda_users = per_km2(10.0);
  double noise_power_dbm = -104.0;  // -inf means noiseless
  double bandwidth_hz = 1.0;
  double inner_radius_m = 500.0;
  Scenario scenario = Scenario::Uniform;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;

  /// Received power at 1 m, P_tx * L0, in watts.
  double macro_power() const noexcept;
  double small_power() const noexcept;
  double tier_power(Tier t) const noexcept;
  double noise_power() const noexcept;
};

/// Base configuration used throughout the numerical study: 46/20 dBm,
/// alpha = 4, L0 = -34 dB, 1 macro and 10 users per km^2, -104 dBm noise,
/// W = 1 Hz. MacroOnly forces the small-cell density to zero.
NetworkConfig paper_config(Scenario scenario, double density_ratio = 10.0, double inner_radius_m = 500.0);

/// Returns cfg re-targeted at another scenario. Switching to MacroOnly zeroes
/// the small-cell density; switching away from it needs the nominal density.
NetworkConfig with_scenario(NetworkConfig cfg, Scenario scenario, double nominal_small_density);

struct DerivedDensities {
  double q1 = 0.0;        // P[served by macro tier]
  double q2_outer = 0.0;  // P[served by small tier | outer region]
  double lambda_loaded_macro = 0.0;
  double lambda_loaded_small = 0.0;
};

struct EffectiveScenarioDensity {
  double small_density_in_outer = 0.0;
  double mean_density_whole_plane = 0.0;
};

struct RegionProbabilities {
  double inner = 0.0;
  double outer = 1.0;
};

/// A CCDF (or swept metric) sampled on a grid. Monte Carlo curves carry
/// Wilson 95% bounds; analytic curves leave them empty.
struct CcdfCurve {
  std::vector<double> thresholds;
  std::vector<double> values;
  Method method = Method::Analytic;
  Scenario scenario = Scenario::Uniform;
  Region region = Region::Overall;
  std::string label;
  std::vector<double> ci_low;
  std::vector<double> ci_high;

  std::size_t size() const noexcept { return values.size(); }
  bool has_confidence() const noexcept { return !ci_low.empty(); }
};

EffectiveScenarioDensity effective_small_density(const NetworkConfig& cfg);

RegionProbabilities region_probabilities(const NetworkConfig& cfg);

}  // namespace hetnet
