#include "hetnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hetnet/analytic.hpp"
#include "hetnet/statistics.hpp"

namespace hetnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool sweeps_network(SweepAxis a) { return a == SweepAxis::InnerRadiusM || a == SweepAxis::DensityRatio; }

NetworkConfig config_for(const ExperimentSpec& spec, Scenario scenario, double ratio, double d) {
  NetworkConfig cfg = spec.base;
  cfg.inner_radius_m = d;
  return with_scenario(cfg, scenario, ratio * cfg.lambda_macro);
}

std::vector<Region> regions_for(const ExperimentSpec& spec, Scenario s) {
  if (is_non_uniform(s)) return spec.regions;
  return {Region::Overall};
}

CcdfCurve pick(const RegionalCurves& rc, Region r) {
  switch (r) {
    case Region::Inner: return rc.inner;
    case Region::Outer: return rc.outer;
    case Region::Overall: break;
  }
  return rc.overall;
}

// Empirical P[metric > fixed] for one region, with a Wilson interval; NaN if the region got no trials.
BinomialInterval mc_point(const std::vector<TrialOutcome>& outcomes, Region region, Metric metric, double fixed) {
  const double t = metric == Metric::Coverage ? db_to_linear(fixed) : fixed;
  std::size_t n = 0, hits = 0;
  for (const auto& o : outcomes) {
    if (region == Region::Inner && !o.inner) continue;
    if (region == Region::Outer && o.inner) continue;
    ++n;
    hits += (metric == Metric::Coverage ? o.sinr : o.rate_bps) > t;
  }
  if (n == 0) return {kNaN, kNaN, kNaN};
  return wilson_interval(hits, n);
}

void print_value(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out << buf;
}

}  // namespace

std::string_view to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::SinrThresholdDb: return "sinr_threshold_db";
    case SweepAxis::RateBps: return "rate_bps";
    case SweepAxis::InnerRadiusM: return "inner_radius_m";
    case SweepAxis::DensityRatio: return "density_ratio";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::SinrThresholdDb, SweepAxis::RateBps, SweepAxis::InnerRadiusM, SweepAxis::DensityRatio}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

Metric ExperimentSpec::effective_metric() const noexcept {
  switch (axis) {
    case SweepAxis::SinrThresholdDb: return Metric::Coverage;
    case SweepAxis::RateBps: return Metric::Throughput;
    default: return metric;
  }
}

void ExperimentSpec::validate() const {
  if (grid.empty()) throw ConfigError("experiment grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end()) || std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    throw ConfigError("experiment grid must be strictly increasing");
  }
  if (scenarios.empty()) throw ConfigError("experiment needs at least one scenario");
  if (methods.empty()) throw ConfigError("experiment needs at least one method");
  if (regions.empty()) throw ConfigError("experiment needs at least one region");
  if (!(density_ratio > 0.0)) throw ConfigError("density_ratio must be > 0");
  if (axis == SweepAxis::RateBps && grid.front() < 0.0) throw ConfigError("rate grid must be nonnegative");
  if (axis == SweepAxis::InnerRadiusM && grid.front() < 0.0) throw ConfigError("inner radius grid must be >= 0");
  if (axis == SweepAxis::DensityRatio && !(grid.front() > 0.0)) throw ConfigError("density ratios must be > 0");
  if (effective_metric() == Metric::Throughput && sweeps_network(axis) && fixed_value < 0.0) {
    throw ConfigError("fixed rate must be nonnegative");
  }
  for (Scenario s : scenarios) {
    for (double x : sweeps_network(axis) ? grid : std::vector<double>{0.0}) {
      const double ratio = axis == SweepAxis::DensityRatio ? x : density_ratio;
      const double d = axis == SweepAxis::InnerRadiusM ? x : base.inner_radius_m;
      const NetworkConfig cfg = config_for(*this, s, ratio, d);
      cfg.validate();
      if (std::find(methods.begin(), methods.end(), Method::MonteCarlo) != methods.end()) sim.validate(cfg);
    }
  }
}

std::string curve_label(Scenario scenario, Region region, std::string_view suffix) {
  std::string out(to_string(scenario));
  if (region != Region::Overall) {
    out += ':';
    out += to_string(region);
  }
  out += suffix;
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const AnalyticSettings& settings) {
  spec.validate();
  ExperimentResult result;
  result.axis = spec.axis;
  const Metric metric = spec.effective_metric();

  for (Scenario scenario : spec.scenarios) {
    const auto regions = regions_for(spec, scenario);
    for (Method method : spec.methods) {
      std::vector<CcdfCurve> curves;
      if (!sweeps_network(spec.axis)) {
        const NetworkConfig cfg = config_for(spec, scenario, spec.density_ratio, spec.base.inner_radius_m);
        if (method == Method::Analytic) {
          for (Region r : regions) {
            curves.push_back(metric == Metric::Coverage
                                 ? analytic_coverage_curve(cfg, spec.grid, r, settings)
                                 : analytic_throughput_curve(cfg, spec.grid, r, &result.warnings, settings));
          }
        } else {
          const auto outcomes = run_trials(cfg, spec.sim);
          const RegionalCurves rc = metric == Metric::Coverage ? coverage_curves(outcomes, cfg, spec.grid)
                                                               : throughput_curves(outcomes, cfg, spec.grid);
          for (Region r : regions) curves.push_back(pick(rc, r));
        }
      } else {
        for (Region r : regions) {
          CcdfCurve c;
          c.method = method;
          c.scenario = scenario;
          c.region = r;
          c.thresholds = spec.grid;
          curves.push_back(std::move(c));
        }
        for (double x : spec.grid) {
          const double ratio = spec.axis == SweepAxis::DensityRatio ? x : spec.density_ratio;
          const double d = spec.axis == SweepAxis::InnerRadiusM ? x : spec.base.inner_radius_m;
          const NetworkConfig cfg = config_for(spec, scenario, ratio, d);
          if (method == Method::Analytic) {
            for (auto& c : curves) {
              const bool empty_inner = c.region == Region::Inner && !(d > 0.0);
              double v = kNaN;
              if (!empty_inner) {
                v = metric == Metric::Coverage
                        ? analytic_coverage(cfg, db_to_linear(spec.fixed_value), c.region, settings)
                        : analytic_throughput_ccdf(cfg, spec.fixed_value, c.region, &result.warnings, settings);
              }
              c.values.push_back(v);
            }
          } else {
            const auto outcomes = run_trials(cfg, spec.sim);
            for (auto& c : curves) {
              const BinomialInterval b = mc_point(outcomes, c.region, metric, spec.fixed_value);
              c.values.push_back(b.estimate);
              c.ci_low.push_back(b.low);
              c.ci_high.push_back(b.high);
            }
          }
        }
      }
      for (auto& c : curves) {
        c.label = curve_label(scenario, c.region, spec.label);
        result.curves.push_back(std::move(c));
      }
    }
  }
  return result;
}

void write_csv(std::ostream& out, SweepAxis axis, const std::vector<CcdfCurve>& curves, bool header) {
  if (header) out << "axis,axis_value,scenario,method,value,ci_low,ci_high\n";
  const std::string axis_name(to_string(axis));
  for (const auto& c : curves) {
    const std::string label = c.label.empty() ? curve_label(c.scenario, c.region, "") : c.label;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      out << axis_name << ',';
      print_value(out, c.thresholds[i]);
      out << ',' << label << ',' << to_string(c.method) << ',';
      print_value(out, c.values[i]);
      out << ',';
      if (c.has_confidence()) print_value(out, c.ci_low[i]);
      out << ',';
      if (c.has_confidence()) print_value(out, c.ci_high[i]);
      out << '\n';
    }
  }
}

void write_csv_file(const std::string& path, SweepAxis axis, const std::vector<CcdfCurve>& curves) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open output file '" + path + "'");
  write_csv(out, axis, curves);
  out.flush();
  if (!out) throw OutputError("failed writing output file '" + path + "'");
}

CompareReport compare_report(const CcdfCurve& analytic, const CcdfCurve& mc) {
  if (analytic.thresholds != mc.thresholds || analytic.size() != mc.size()) {
    throw std::invalid_argument("compare_report: curves use different grids");
  }
  if (!mc.has_confidence()) throw std::invalid_argument("compare_report: MC curve has no confidence bounds");
  CompareReport rep;
  std::size_t inside = 0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    if (std::isnan(analytic.values[i]) || std::isnan(mc.values[i])) continue;
    ++rep.points;
    const double gap = std::abs(analytic.values[i] - mc.values[i]);
    if (gap > rep.max_gap || rep.points == 1) {
      rep.max_gap = gap;
      rep.threshold_at_max = analytic.thresholds[i];
    }
    inside += analytic.values[i] >= mc.ci_low[i] && analytic.values[i] <= mc.ci_high[i];
  }
  if (rep.points > 0) rep.fraction_inside_ci = static_cast<double>(inside) / rep.points;
  return rep;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("linear_grid: bad range");
  std::vector<double> g;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) g.push_back(lo + step * static_cast<double>(i));
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || hi <= lo || n < 2) throw std::invalid_argument("log_grid: bad range");
  std::vector<double> g;
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i) g.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) / (n - 1)));
  return g;
}

std::vector<ExperimentSpec> figure_preset(int figure, const std::vector<Method>& methods, const SimSettings& sim) {
  ExperimentSpec proto;
  proto.base = paper_config(Scenario::Uniform, 10.0, 500.0);
  proto.density_ratio = 10.0;
  proto.methods = methods;
  proto.sim = sim;
  const std::vector<Scenario> all{Scenario::MacroOnly, Scenario::Uniform, Scenario::NonUniformI,
                                  Scenario::NonUniformII};
  const std::vector<Region> split{Region::Overall, Region::Inner, Region::Outer};

  std::vector<ExperimentSpec> out;
  auto ccdf = [&](SweepAxis axis, std::vector<double> grid, std::vector<Scenario> scenarios,
                  std::vector<Region> regions) {
    ExperimentSpec s = proto;
    s.axis = axis;
    s.grid = std::move(grid);
    s.scenarios = std::move(scenarios);
    s.regions = std::move(regions);
    out.push_back(std::move(s));
  };
  auto over_d = [&](Metric metric, std::initializer_list<double> fixed, const char* tag) {
    for (double ratio : {10.0, 5.0}) {
      for (double v : fixed) {
        ExperimentSpec s = proto;
        s.axis = SweepAxis::InnerRadiusM;
        s.grid = linear_grid(100.0, 1000.0, 50.0);
        s.scenarios = all;
        s.density_ratio = ratio;
        s.metric = metric;
        s.fixed_value = v;
        char buf[96];
        std::snprintf(buf, sizeof buf, "|ratio=%g|%s=%g", ratio, tag, v);
        s.label = buf;
        out.push_back(std::move(s));
      }
    }
  };

  switch (figure) {
    case 2: ccdf(SweepAxis::SinrThresholdDb, linear_grid(-10.0, 20.0, 1.0), {Scenario::NonUniformI}, split); break;
    case 3: ccdf(SweepAxis::SinrThresholdDb, linear_grid(-10.0, 20.0, 1.0), all, {Region::Overall}); break;
    case 4: over_d(Metric::Coverage, {-5.0, 10.0}, "T_db"); break;
    case 5: ccdf(SweepAxis::RateBps, log_grid(1e-3, 10.0, 41), {Scenario::NonUniformI}, split); break;
    case 6: ccdf(SweepAxis::RateBps, log_grid(1e-3, 10.0, 41), all, {Region::Overall}); break;
    case 7: over_d(Metric::Throughput, {0.02, 1.0}, "rate_bps"); break;
    default: throw ConfigError("figure must be one of 2..7");
  }
  return out;
}

}  // namespace hetnet
