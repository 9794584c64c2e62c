#include "hetnet/analytic.hpp"

#include <cmath>
#include <string>
#include <stdexcept>

#include "hetnet/analytic_nonuniform.hpp"
#include "hetnet/analytic_uniform.hpp"

namespace hetnet {

namespace {

void require_overall(const NetworkConfig& cfg, Region region) {
  if (region != Region::Overall) {
    throw std::invalid_argument(std::string("region-conditioned analytic curves are not defined for ") +
                                std::string(to_string(cfg.scenario)));
  }
}

// Evaluates f(model, x) on every grid value with one model instance.
template <class F>
std::vector<double> evaluate_grid(const NetworkConfig& cfg, std::span<const double> grid, Region region,
                                  const AnalyticSettings& settings, F&& f) {
  std::vector<double> out;
  out.reserve(grid.size());
  if (is_non_uniform(cfg.scenario)) {
    const NonUniformModel model(cfg, settings);
    for (double x : grid) out.push_back(f(model, x, region));
  } else {
    require_overall(cfg, region);
    const UniformModel model(cfg, settings);
    for (double x : grid) out.push_back(f(model, x, region));
  }
  return out;
}

double coverage_of(const NonUniformModel& m, double t, Region r) {
  switch (r) {
    case Region::Inner: return m.coverage_inner(t);
    case Region::Outer: return m.coverage_outer(t);
    case Region::Overall: break;
  }
  return m.coverage_overall(t);
}

double coverage_of(const UniformModel& m, double t, Region) { return m.coverage(t); }

double throughput_of(const NonUniformModel& m, double rate, Region r, WarningLog* w) {
  switch (r) {
    case Region::Inner: return m.throughput_ccdf_inner(rate, w);
    case Region::Outer: return m.throughput_ccdf_outer(rate, w);
    case Region::Overall: break;
  }
  return m.throughput_ccdf_overall(rate, w);
}

double throughput_of(const UniformModel& m, double rate, Region, WarningLog* w) {
  return m.throughput_ccdf(rate, w);
}

CcdfCurve make_curve(const NetworkConfig& cfg, std::span<const double> grid, std::vector<double> values,
                     Region region) {
  CcdfCurve curve;
  curve.thresholds.assign(grid.begin(), grid.end());
  curve.values = std::move(values);
  curve.method = Method::Analytic;
  curve.scenario = cfg.scenario;
  curve.region = region;
  return curve;
}

}  // namespace

double analytic_coverage(const NetworkConfig& cfg, double sinr_threshold, Region region,
                         const AnalyticSettings& settings) {
  const double t[] = {sinr_threshold};
  return evaluate_grid(cfg, t, region, settings,
                       [](const auto& m, double x, Region r) { return coverage_of(m, x, r); })
      .front();
}

double analytic_throughput_ccdf(const NetworkConfig& cfg, double rate_bps, Region region, WarningLog* warnings,
                                const AnalyticSettings& settings) {
  const double t[] = {rate_bps};
  return evaluate_grid(cfg, t, region, settings,
                       [warnings](const auto& m, double x, Region r) { return throughput_of(m, x, r, warnings); })
      .front();
}

CcdfCurve analytic_coverage_curve(const NetworkConfig& cfg, std::span<const double> thresholds_db, Region region,
                                  const AnalyticSettings& settings) {
  auto values = evaluate_grid(cfg, thresholds_db, region, settings, [](const auto& m, double db, Region r) {
    return coverage_of(m, db_to_linear(db), r);
  });
  return make_curve(cfg, thresholds_db, std::move(values), region);
}

CcdfCurve analytic_throughput_curve(const NetworkConfig& cfg, std::span<const double> rates_bps, Region region,
                                    WarningLog* warnings, const AnalyticSettings& settings) {
  auto values = evaluate_grid(cfg, rates_bps, region, settings, [warnings](const auto& m, double rate, Region r) {
    return throughput_of(m, rate, r, warnings);
  });
  return make_curve(cfg, rates_bps, std::move(values), region);
}

double analytic_rate_quantile(const NetworkConfig& cfg, double ccdf_level, double lo, double hi,
                              WarningLog* warnings) {
  if (!(ccdf_level > 0.0 && ccdf_level < 1.0)) throw std::domain_error("ccdf level must lie in (0, 1)");
  auto above = [&](double rate) { return analytic_throughput_ccdf(cfg, rate, Region::Overall, warnings) > ccdf_level; };
  if (!above(lo) || above(hi)) throw std::domain_error("rate quantile is not bracketed by [lo, hi]");
  // Bisection in log-rate; 60 halvings resolve far below the curve's own accuracy.
  for (int i = 0; i < 60; ++i) {
    const double mid = std::sqrt(lo * hi);
    (above(mid) ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace hetnet
