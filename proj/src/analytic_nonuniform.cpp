#include "hetnet/analytic_nonuniform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "analytic_detail.hpp"
#include "hetnet/special_functions.hpp"

namespace hetnet {

namespace {

constexpr double kPi = std::numbers::pi;

void require_non_uniform(const NetworkConfig& cfg) {
  cfg.validate();
  if (!is_non_uniform(cfg.scenario)) {
    throw std::invalid_argument("non-uniform model requires scenario NonUniformI or NonUniformII");
  }
}

struct LemmaInputs {
  double lambda_small;  // outer-region density
  double k;
  double lambda_eq;     // l1 + l2 k
  RegionProbabilities regions;
};

LemmaInputs lemma_inputs(const NetworkConfig& cfg) {
  LemmaInputs in;
  in.lambda_small = effective_small_density(cfg).small_density_in_outer;
  in.k = detail::power_ratio_factor(cfg);
  in.lambda_eq = cfg.lambda_macro + in.lambda_small * in.k;
  in.regions = region_probabilities(cfg);
  return in;
}

DerivedDensities derive(const NetworkConfig& cfg, const LemmaInputs& in) {
  const double l1 = cfg.lambda_macro;
  const double l2 = in.lambda_small;
  const double d2 = cfg.inner_radius_m * cfg.inner_radius_m;
  const double macro_share = l1 / in.lambda_eq;

  DerivedDensities out;
  out.q1 = in.regions.inner + macro_share * std::exp(-kPi * in.lambda_eq * d2);
  out.q2_outer = 1.0 - macro_share * std::exp(-kPi * l2 * in.k * d2);
  out.lambda_loaded_macro = l1 * (1.0 - prob_unloaded(cfg.lambda_users, l1 / out.q1));
  out.lambda_loaded_small = l2 * (1.0 - prob_unloaded(cfg.lambda_users, l2 / out.q2_outer));
  return out;
}

}  // namespace

DerivedDensities derive_densities(const NetworkConfig& cfg) {
  require_non_uniform(cfg);
  return derive(cfg, lemma_inputs(cfg));
}

NonUniformModel::NonUniformModel(const NetworkConfig& cfg, AnalyticSettings settings)
    : cfg_(cfg), settings_(settings) {
  require_non_uniform(cfg_);
  const LemmaInputs in = lemma_inputs(cfg_);
  lambda_small_ = in.lambda_small;
  k_ = in.k;
  lambda_eq_macro_ = in.lambda_eq;
  regions_ = in.regions;
  derived_ = derive(cfg_, in);

  // M = e^{-pi l1 D^2} / (e^{-pi l1 D^2} - l1/(l1 + l2 k) e^{-pi (l1 + l2 k) D^2}); the common
  // factor e^{-pi l1 D^2} is divided out so large D does not underflow.
  const double d2 = cfg_.inner_radius_m * cfg_.inner_radius_m;
  constant_m_ = 1.0 / (1.0 - cfg_.lambda_macro / lambda_eq_macro_ * std::exp(-kPi * lambda_small_ * k_ * d2));
}

void NonUniformModel::require_inner_region() const {
  if (!(cfg_.inner_radius_m > 0.0)) throw std::domain_error("inner region is empty (inner_radius_m = 0)");
}

ServingDistancePdf NonUniformModel::serving_distance_pdf(DistanceRegion region) const {
  const double l1 = cfg_.lambda_macro;
  const double l2 = lambda_small_;
  const double d = cfg_.inner_radius_m;
  ServingDistancePdf pdf;
  pdf.region = region;

  switch (region) {
    case DistanceRegion::Inner: {
      require_inner_region();
      const double p_inner = -std::expm1(-kPi * l1 * d * d);
      pdf.lower = 0.0;
      pdf.upper = d;
      pdf.density = [=](double x) {
        if (x < 0.0 || x > d) return 0.0;
        return 2.0 * kPi * l1 * x * std::exp(-kPi * l1 * x * x) / p_inner;
      };
      pdf.cdf = [=](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= d) return 1.0;
        return -std::expm1(-kPi * l1 * x * x) / p_inner;
      };
      break;
    }
    case DistanceRegion::OuterTier1: {
      const double le = lambda_eq_macro_;
      pdf.lower = d;
      pdf.density = [=](double x) {
        if (x <= d) return 0.0;
        return 2.0 * kPi * le * x * std::exp(-kPi * le * (x * x - d * d));
      };
      pdf.cdf = [=](double x) {
        if (x <= d) return 0.0;
        return -std::expm1(-kPi * le * (x * x - d * d));
      };
      break;
    }
    case DistanceRegion::OuterTier2: {
      const double m = constant_m_;
      const double br = std::sqrt(k_) * d;  // (P2/P1)^(1/alpha) D
      const double c_far = l1 / k_ + l2;
      pdf.lower = 0.0;
      pdf.breakpoint = br;
      pdf.density = [=](double x) {
        if (x < 0.0) return 0.0;
        if (x <= br) return m * 2.0 * kPi * l2 * x * std::exp(-kPi * l2 * x * x);
        return m * 2.0 * kPi * l2 * x * std::exp(-kPi * c_far * x * x + kPi * l1 * d * d);
      };
      pdf.cdf = [=](double x) {
        if (x <= 0.0) return 0.0;
        if (x <= br) return m * -std::expm1(-kPi * l2 * x * x);
        const double near = -std::expm1(-kPi * l2 * br * br);
        const double far = l2 / c_far *
                           (std::exp(-kPi * l2 * br * br) - std::exp(-kPi * c_far * x * x + kPi * l1 * d * d));
        return std::min(1.0, m * (near + far));
      };
      break;
    }
  }
  return pdf;
}

double NonUniformModel::coverage_inner(double sinr_threshold) const {
  require_inner_region();
  if (!(sinr_threshold >= 0.0)) throw std::domain_error("SINR threshold must be nonnegative");
  if (std::isinf(sinr_threshold)) return 0.0;

  const double alpha = cfg_.path_loss_exponent;
  const double d = cfg_.inner_radius_m;
  const double p1 = cfg_.macro_power();
  const double p2 = cfg_.small_power();
  const double l1 = cfg_.lambda_macro;
  const double noise_coeff = sinr_threshold * cfg_.noise_power() / p1;
  const double c = l1 + derived_.lambda_loaded_macro * rho(sinr_threshold, alpha);
  const double small_weight = kPi * derived_.lambda_loaded_small * d * d;
  const double small_arg = p2 * sinr_threshold / (p1 * detail::pow_alpha(d, alpha));

  auto integrand = [&](double x) {
    const double xa = detail::pow_alpha(x, alpha);
    const double small = small_weight > 0.0 ? small_weight * rho(small_arg * xa, alpha) : 0.0;
    return x * std::exp(-noise_coeff * xa - kPi * c * x * x - small);
  };
  const double upper = std::min(d, detail::gaussian_cutoff_radius(0.0, c, settings_));
  const double value = integrate(integrand, 0.0, upper, settings_.quadrature).value;
  return std::clamp(2.0 * kPi * l1 * value / regions_.inner, 0.0, 1.0);
}

double NonUniformModel::coverage_outer_tier1(double sinr_threshold) const {
  if (!(sinr_threshold >= 0.0)) throw std::domain_error("SINR threshold must be nonnegative");
  if (std::isinf(sinr_threshold)) return 0.0;

  const double alpha = cfg_.path_loss_exponent;
  const double d = cfg_.inner_radius_m;
  const double le = lambda_eq_macro_;
  const double noise_coeff = sinr_threshold * cfg_.noise_power() / cfg_.macro_power();
  const double loaded = derived_.lambda_loaded_macro + derived_.lambda_loaded_small * k_;
  const double c = le + rho(sinr_threshold, alpha) * loaded;

  // The 1 / e^{-pi le D^2} prefactor is folded into the exponent.
  auto integrand = [&](double x) {
    return x * std::exp(-noise_coeff * detail::pow_alpha(x, alpha) - kPi * c * x * x + kPi * le * d * d);
  };
  const double upper = detail::gaussian_cutoff_radius(d, c, settings_);
  const double value = integrate(integrand, d, upper, settings_.quadrature).value;
  return std::clamp(2.0 * kPi * le * value, 0.0, 1.0);
}

double NonUniformModel::coverage_outer_tier2(double sinr_threshold) const {
  if (!(sinr_threshold >= 0.0)) throw std::domain_error("SINR threshold must be nonnegative");
  if (std::isinf(sinr_threshold)) return 0.0;

  const double alpha = cfg_.path_loss_exponent;
  const double d = cfg_.inner_radius_m;
  const double l1 = cfg_.lambda_macro;
  const double l2 = lambda_small_;
  const double p1 = cfg_.macro_power();
  const double p2 = cfg_.small_power();
  const double lm = derived_.lambda_loaded_macro;
  const double ls = derived_.lambda_loaded_small;
  const double rho_t = rho(sinr_threshold, alpha);
  const double noise_coeff = sinr_threshold * cfg_.noise_power() / p2;
  const double br = std::sqrt(k_) * d;

  double near = 0.0;
  if (br > 0.0) {
    // Macro interferers are confined to distances beyond D.
    const double macro_weight = kPi * lm * d * d;
    const double macro_arg = p1 * sinr_threshold / (p2 * detail::pow_alpha(d, alpha));
    const double c = l2 + ls * rho_t;
    auto integrand = [&](double x) {
      const double xa = detail::pow_alpha(x, alpha);
      const double macro = macro_weight > 0.0 ? macro_weight * rho(macro_arg * xa, alpha) : 0.0;
      return x * std::exp(-noise_coeff * xa - macro - kPi * c * x * x);
    };
    near = integrate(integrand, 0.0, std::min(br, detail::gaussian_cutoff_radius(0.0, c, settings_)),
                     settings_.quadrature)
               .value;
  }

  // Beyond the branch point the 1 / e^{-pi l1 D^2} prefactor is folded into the exponent.
  const double c_far = (l1 / k_ + l2) + rho_t * (lm / k_ + ls);
  auto integrand = [&](double x) {
    return x * std::exp(-noise_coeff * detail::pow_alpha(x, alpha) - kPi * c_far * x * x + kPi * l1 * d * d);
  };
  const double far =
      integrate(integrand, br, detail::gaussian_cutoff_radius(br, c_far, settings_), settings_.quadrature).value;

  return std::clamp(2.0 * kPi * l2 * constant_m_ * (near + far), 0.0, 1.0);
}

double NonUniformModel::coverage_outer(double sinr_threshold) const {
  const double q2 = derived_.q2_outer;
  return (1.0 - q2) * coverage_outer_tier1(sinr_threshold) + q2 * coverage_outer_tier2(sinr_threshold);
}

double NonUniformModel::coverage_overall(double sinr_threshold) const {
  double out = regions_.outer * coverage_outer(sinr_threshold);
  if (regions_.inner > 0.0) out += regions_.inner * coverage_inner(sinr_threshold);
  return out;
}

double NonUniformModel::throughput_ccdf_inner(double rate_bps, WarningLog* warnings) const {
  require_inner_region();
  return detail::rate_series(cfg_, cfg_.lambda_macro / derived_.q1, rate_bps, settings_.series, warnings,
                             "inner-region throughput", [&](double t) { return coverage_inner(t); });
}

double NonUniformModel::throughput_ccdf_outer(double rate_bps, WarningLog* warnings) const {
  const double q2 = derived_.q2_outer;
  const double macro =
      detail::rate_series(cfg_, cfg_.lambda_macro / derived_.q1, rate_bps, settings_.series, warnings,
                          "outer-region macro throughput", [&](double t) { return coverage_outer_tier1(t); });
  const double small =
      detail::rate_series(cfg_, lambda_small_ / q2, rate_bps, settings_.series, warnings,
                          "outer-region small-cell throughput", [&](double t) { return coverage_outer_tier2(t); });
  return (1.0 - q2) * macro + q2 * small;
}

double NonUniformModel::throughput_ccdf_overall(double rate_bps, WarningLog* warnings) const {
  double out = regions_.outer * throughput_ccdf_outer(rate_bps, warnings);
  if (regions_.inner > 0.0) out += regions_.inner * throughput_ccdf_inner(rate_bps, warnings);
  return out;
}

}  // namespace hetnet
