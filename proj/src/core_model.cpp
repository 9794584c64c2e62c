#include "hetnet/core_model.hpp"

#include <cmath>
#include <numbers>

namespace hetnet {

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::MacroOnly: return "MacroOnly";
    case Scenario::Uniform: return "Uniform";
    case Scenario::NonUniformI: return "NonUniformI";
    case Scenario::NonUniformII: return "NonUniformII";
  }
  return "?";
}

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::Overall: return "overall";
    case Region::Inner: return "inner";
    case Region::Outer: return "outer";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  return m == Method::Analytic ? "Analytic" : "MonteCarlo";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (auto s : {Scenario::MacroOnly, Scenario::Uniform, Scenario::NonUniformI, Scenario::NonUniformII}) {
    if (name == to_string(s)) return s;
  }
  if (name == "macro") return Scenario::MacroOnly;
  if (name == "uniform") return Scenario::Uniform;
  if (name == "I" || name == "scenario1") return Scenario::NonUniformI;
  if (name == "II" || name == "scenario2") return Scenario::NonUniformII;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "Analytic" || name == "analytic") return Method::Analytic;
  if (name == "MonteCarlo" || name == "montecarlo" || name == "mc") return Method::MonteCarlo;
  return std::nullopt;
}

bool is_non_uniform(Scenario s) noexcept {
  return s == Scenario::NonUniformI || s == Scenario::NonUniformII;
}

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts) + 30.0; }
double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

void NetworkConfig::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(path_loss_exponent > 2.0) || !finite(path_loss_exponent)) {
    throw ConfigError("path_loss_exponent must be finite and > 2");
  }
  if (!finite(p_tx_macro) || !finite(p_tx_small) || !finite(path_loss_const_db)) {
    throw ConfigError("transmit powers and path loss constant must be finite");
  }
  if (!(lambda_macro > 0.0) || !finite(lambda_macro)) throw ConfigError("lambda_macro must be > 0");
  if (!(lambda_users > 0.0) || !finite(lambda_users)) throw ConfigError("lambda_users must be > 0");
  if (!finite(lambda_small_nominal) || lambda_small_nominal < 0.0) {
    throw ConfigError("lambda_small_nominal must be finite and >= 0");
  }
  if (scenario == Scenario::MacroOnly && lambda_small_nominal != 0.0) {
    throw ConfigError("MacroOnly requires lambda_small_nominal = 0");
  }
  if (scenario != Scenario::MacroOnly && !(lambda_small_nominal > 0.0)) {
    throw ConfigError("lambda_small_nominal must be > 0 unless scenario is MacroOnly");
  }
  if (!(inner_radius_m >= 0.0) || !finite(inner_radius_m)) throw ConfigError("inner_radius_m must be >= 0");
  if (!(bandwidth_hz > 0.0) || !finite(bandwidth_hz)) throw ConfigError("bandwidth_hz must be > 0");
  if (std::isnan(noise_power_dbm) || noise_power_dbm == HUGE_VAL) {
    throw ConfigError("noise_power_dbm must be finite or -inf");
  }
}

double NetworkConfig::macro_power() const noexcept {
  return dbm_to_watts(p_tx_macro) * db_to_linear(path_loss_const_db);
}

double NetworkConfig::small_power() const noexcept {
  return dbm_to_watts(p_tx_small) * db_to_linear(path_loss_const_db);
}

double NetworkConfig::tier_power(Tier t) const noexcept {
  return t == Tier::Macro ? macro_power() : small_power();
}

double NetworkConfig::noise_power() const noexcept {
  if (std::isinf(noise_power_dbm) && noise_power_dbm < 0) return 0.0;
  return dbm_to_watts(noise_power_dbm);
}

NetworkConfig paper_config(Scenario scenario, double density_ratio, double inner_radius_m) {
  NetworkConfig cfg;
  cfg.scenario = scenario;
  cfg.inner_radius_m = inner_radius_m;
  cfg.lambda_small_nominal = scenario == Scenario::MacroOnly ? 0.0 : density_ratio * cfg.lambda_macro;
  return cfg;
}

NetworkConfig with_scenario(NetworkConfig cfg, Scenario scenario, double nominal_small_density) {
  cfg.scenario = scenario;
  cfg.lambda_small_nominal = scenario == Scenario::MacroOnly ? 0.0 : nominal_small_density;
  return cfg;
}

RegionProbabilities region_probabilities(const NetworkConfig& cfg) {
  cfg.validate();
  const double d = cfg.inner_radius_m;
  RegionProbabilities p;
  p.outer = std::exp(-std::numbers::pi * cfg.lambda_macro * d * d);
  p.inner = 1.0 - p.outer;
  return p;
}

EffectiveScenarioDensity effective_small_density(const NetworkConfig& cfg) {
  cfg.validate();
  const double l2 = cfg.lambda_small_nominal;
  const double p_outer = region_probabilities(cfg).outer;
  switch (cfg.scenario) {
    case Scenario::MacroOnly:
      return {0.0, 0.0};
    case Scenario::Uniform:
      return {l2, l2};
    case Scenario::NonUniformI:
      return {l2, l2 * p_outer};
    case Scenario::NonUniformII:
      if (p_outer <= 0.0) {
        throw ConfigError("NonUniformII needs a non-empty outer region (inner_radius_m too large)");
      }
      // Plane mean is exactly the nominal density.
      return {l2 / p_outer, l2};
  }
  return {};
}

}  // namespace hetnet
