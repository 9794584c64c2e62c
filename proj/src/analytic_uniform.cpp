#include "hetnet/analytic_uniform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "analytic_detail.hpp"
#include "hetnet/special_functions.hpp"

namespace hetnet {

namespace detail {

double threshold_for_rate(std::size_t n, double rate_bps, double bandwidth_hz) {
  return std::expm1(static_cast<double>(n + 1) * rate_bps / bandwidth_hz * std::numbers::ln2);
}

double power_ratio_factor(const NetworkConfig& cfg) {
  return std::pow(cfg.small_power() / cfg.macro_power(), 2.0 / cfg.path_loss_exponent);
}

double rate_series(const NetworkConfig& cfg, double lambda_eq, double rate_bps, const SeriesSettings& settings,
                   WarningLog* warnings, const char* what, const std::function<double(double)>& coverage) {
  if (!(rate_bps >= 0.0)) throw std::domain_error("rate threshold must be nonnegative");
  auto term = [&](std::size_t n) {
    const double p = pmf_users_sharing_cell(n, cfg.lambda_users, lambda_eq);
    if (p == 0.0) return 0.0;
    return p * coverage(threshold_for_rate(n, rate_bps, cfg.bandwidth_hz));
  };
  const SeriesResult r = sum_series(term, settings);
  if (r.truncated && warnings != nullptr) {
    warnings->add(std::string(what) + ": series truncated at " + std::to_string(r.terms_used) +
                  " terms for rate " + std::to_string(rate_bps));
  }
  return r.value;
}

double gaussian_cutoff_radius(double x0, double c, const AnalyticSettings& settings) {
  return std::sqrt(x0 * x0 + settings.gaussian_cutoff / (std::numbers::pi * c));
}

}  // namespace detail

namespace {

void require_uniform(const NetworkConfig& cfg) {
  cfg.validate();
  if (cfg.scenario != Scenario::Uniform && cfg.scenario != Scenario::MacroOnly) {
    throw std::invalid_argument("uniform model requires a Uniform or MacroOnly scenario");
  }
}

}  // namespace

UniformModel::UniformModel(const NetworkConfig& cfg, AnalyticSettings settings)
    : cfg_(cfg), settings_(settings) {
  require_uniform(cfg_);
  const double l1 = cfg_.lambda_macro;
  const double l2 = cfg_.lambda_small_nominal;
  const double k = detail::power_ratio_factor(cfg_);

  equivalent_.lambda_eq_1 = l1 + l2 * k;
  equivalent_.lambda_eq_2 = l1 / k + l2;

  association_.q1 = l1 / equivalent_.lambda_eq_1;
  association_.q2 = 1.0 - association_.q1;

  loaded_.macro = l1 * (1.0 - prob_unloaded(cfg_.lambda_users, equivalent_.lambda_eq_1));
  loaded_.small = l2 > 0.0 ? l2 * (1.0 - prob_unloaded(cfg_.lambda_users, equivalent_.lambda_eq_2)) : 0.0;

  equivalent_.lambda_eq_1_loaded = loaded_.macro + loaded_.small * k;
  equivalent_.lambda_eq_2_loaded = loaded_.macro / k + loaded_.small;
}

double UniformModel::coverage_tier(Tier tier, double sinr_threshold) const {
  if (!(sinr_threshold >= 0.0)) throw std::domain_error("SINR threshold must be nonnegative");
  if (std::isinf(sinr_threshold)) return 0.0;

  const bool macro = tier == Tier::Macro;
  const double lambda_eq = macro ? equivalent_.lambda_eq_1 : equivalent_.lambda_eq_2;
  const double lambda_loaded = macro ? equivalent_.lambda_eq_1_loaded : equivalent_.lambda_eq_2_loaded;
  const double alpha = cfg_.path_loss_exponent;
  const double noise_coeff = sinr_threshold * cfg_.noise_power() / cfg_.tier_power(tier);
  const double c = lambda_eq + rho(sinr_threshold, alpha) * lambda_loaded;

  auto integrand = [&](double x) {
    return x * std::exp(-noise_coeff * detail::pow_alpha(x, alpha) - std::numbers::pi * c * x * x);
  };
  const double upper = detail::gaussian_cutoff_radius(0.0, c, settings_);
  const double value = integrate(integrand, 0.0, upper, settings_.quadrature).value;
  return std::clamp(2.0 * std::numbers::pi * lambda_eq * value, 0.0, 1.0);
}

double UniformModel::coverage(double sinr_threshold) const {
  double out = association_.q1 * coverage_tier(Tier::Macro, sinr_threshold);
  if (association_.q2 > 0.0) out += association_.q2 * coverage_tier(Tier::Small, sinr_threshold);
  return out;
}

double UniformModel::throughput_ccdf_tier(Tier tier, double rate_bps, WarningLog* warnings) const {
  const double lambda_eq = tier == Tier::Macro ? equivalent_.lambda_eq_1 : equivalent_.lambda_eq_2;
  return detail::rate_series(cfg_, lambda_eq, rate_bps, settings_.series, warnings, "uniform throughput",
                             [&](double t) { return coverage_tier(tier, t); });
}

double UniformModel::throughput_ccdf(double rate_bps, WarningLog* warnings) const {
  double out = association_.q1 * throughput_ccdf_tier(Tier::Macro, rate_bps, warnings);
  if (association_.q2 > 0.0) out += association_.q2 * throughput_ccdf_tier(Tier::Small, rate_bps, warnings);
  return out;
}

AssociationProbabilities association_probs_uniform(const NetworkConfig& cfg) {
  return UniformModel(cfg).association();
}

LoadedDensities loaded_densities_uniform(const NetworkConfig& cfg) { return UniformModel(cfg).loaded(); }

double coverage_uniform_tier(const NetworkConfig& cfg, Tier tier, double sinr_threshold) {
  return UniformModel(cfg).coverage_tier(tier, sinr_threshold);
}

double coverage_uniform(const NetworkConfig& cfg, double sinr_threshold) {
  return UniformModel(cfg).coverage(sinr_threshold);
}

double throughput_ccdf_uniform(const NetworkConfig& cfg, double rate_bps, WarningLog* warnings) {
  return UniformModel(cfg).throughput_ccdf(rate_bps, warnings);
}

}  // namespace hetnet
