// hetnet-sg: coverage / throughput curves, sweeps, figure presets and
// analytic-vs-simulation validation for two-tier cellular deployments.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/config_file.hpp"
#include "hetnet/experiments.hpp"
#include "hetnet/quadrature.hpp"

using namespace hetnet;

namespace {

enum Exit : int {
  kOk = 0,
  kConfig = 2,
  kOutput = 3,
  kNumeric = 4,
  kWarnings = 5,
  kValidateFailed = 6,
};

struct Common {
  std::string config_path;
  std::vector<std::string> scenarios;
  std::vector<std::string> methods;
  std::vector<std::string> regions;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned threads = 0;
  double window = -1.0;
  std::string out;
  double d_meters = -1.0;
  double density_ratio = -1.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--scenario", c.scenarios, "MacroOnly, Uniform, NonUniformI or NonUniformII (repeatable)");
  cmd->add_option("--method", c.methods, "Analytic or MonteCarlo (repeatable)");
  cmd->add_option("--region", c.regions, "overall, inner or outer (repeatable; non-uniform scenarios only)");
  cmd->add_option("--trials", c.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Monte Carlo seed")->each([&c](const std::string&) { c.seed_set = true; });
  cmd->add_option("--threads", c.threads, "Monte Carlo worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--window", c.window, "simulation window radius in m (0 = default)");
  cmd->add_option("--out", c.out, "CSV output path (stdout if omitted)");
  cmd->add_option("--d-meters", c.d_meters, "inner region radius D in m");
  cmd->add_option("--density-ratio", c.density_ratio, "small-cell to macro density ratio");
}

template <class T, class Parse>
std::vector<T> parse_list(const std::vector<std::string>& names, Parse parse, const char* what) {
  std::vector<T> out;
  for (const auto& n : names) {
    const auto v = parse(n);
    if (!v) throw ConfigError(std::string("unknown ") + what + " '" + n + "'");
    if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
  }
  return out;
}

std::optional<Region> parse_region(std::string_view n) {
  if (n == "overall") return Region::Overall;
  if (n == "inner") return Region::Inner;
  if (n == "outer") return Region::Outer;
  return std::nullopt;
}

// Defaults, then the config file, then flags.
ExperimentSpec base_spec(const Common& c) {
  RunConfig rc;
  rc.sim.trials = 10000;
  rc.sim.parallel_streams = std::max(1u, std::thread::hardware_concurrency());
  if (!c.config_path.empty()) rc = load_config_file(c.config_path, rc);
  const auto has = [&rc](const char* key) {
    return std::find(rc.assigned.begin(), rc.assigned.end(), key) != rc.assigned.end();
  };

  ExperimentSpec spec;
  spec.base = rc.network;
  spec.sim = rc.sim;
  if (has("lambda_small_nominal") && rc.network.lambda_small_nominal > 0.0) {
    spec.density_ratio = rc.network.lambda_small_nominal / rc.network.lambda_macro;
  }
  if (c.density_ratio >= 0.0) spec.density_ratio = c.density_ratio;
  if (c.d_meters >= 0.0) spec.base.inner_radius_m = c.d_meters;
  if (c.trials > 0) spec.sim.trials = c.trials;
  if (c.seed_set) spec.sim.seed = c.seed;
  if (c.threads > 0) spec.sim.parallel_streams = c.threads;
  if (c.window >= 0.0) spec.sim.window_radius_m = c.window;

  if (!c.scenarios.empty()) {
    spec.scenarios = parse_list<Scenario>(c.scenarios, parse_scenario, "scenario");
  } else if (has("scenario")) {
    spec.scenarios = {rc.network.scenario};
  } else {
    spec.scenarios = {Scenario::MacroOnly, Scenario::Uniform, Scenario::NonUniformI, Scenario::NonUniformII};
  }
  if (!c.methods.empty()) spec.methods = parse_list<Method>(c.methods, parse_method, "method");
  if (!c.regions.empty()) spec.regions = parse_list<Region>(c.regions, parse_region, "region");
  return spec;
}

void emit(const std::string& out, SweepAxis axis, const std::vector<CcdfCurve>& curves) {
  if (out.empty()) {
    write_csv(std::cout, axis, curves);
    std::cout.flush();
    if (!std::cout) throw OutputError("failed writing to stdout");
  } else {
    write_csv_file(out, axis, curves);
  }
}

int finish(const WarningLog& warnings) {
  for (const auto& w : warnings.messages) std::cerr << "warning: " << w << '\n';
  return warnings.empty() ? kOk : kWarnings;
}

int run_specs(const std::vector<ExperimentSpec>& specs, const std::string& out) {
  std::vector<CcdfCurve> curves;
  WarningLog warnings;
  for (const auto& s : specs) s.validate();
  for (const auto& s : specs) {
    ExperimentResult r = run_experiment(s);
    for (auto& c : r.curves) curves.push_back(std::move(c));
    for (auto& w : r.warnings.messages) warnings.add(std::move(w));
  }
  emit(out, specs.front().axis, curves);
  return finish(warnings);
}

int run_validate(ExperimentSpec spec, double tolerance) {
  spec.axis = SweepAxis::SinrThresholdDb;
  spec.grid = linear_grid(-10.0, 20.0, 1.0);
  spec.methods = {Method::Analytic, Method::MonteCarlo};
  spec.regions = {Region::Overall, Region::Inner, Region::Outer};
  const ExperimentResult r = run_experiment(spec);

  bool ok = true;
  std::printf("%-24s %9s %9s %9s\n", "curve", "max_gap", "at_T_db", "in_ci");
  for (const auto& a : r.curves) {
    if (a.method != Method::Analytic) continue;
    const auto mc = std::find_if(r.curves.begin(), r.curves.end(), [&a](const CcdfCurve& c) {
      return c.method == Method::MonteCarlo && c.label == a.label;
    });
    if (mc == r.curves.end() || mc->size() == 0) continue;
    const CompareReport rep = compare_report(a, *mc);
    const bool pass = rep.max_gap <= tolerance;
    ok = ok && pass;
    std::printf("%-24s %9.4f %9.1f %9.3f %s\n", a.label.c_str(), rep.max_gap, rep.threshold_at_max,
                rep.fraction_inside_ci, pass ? "PASS" : "FAIL");
  }
  const int w = finish(r.warnings);
  if (!ok) return kValidateFailed;
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage and throughput of two-tier cellular deployments"};
  app.require_subcommand(1);

  Common common;
  double from = 0.0, to = 0.0, step = 0.0;
  std::size_t points = 41;
  std::string axis_name = "inner_radius_m";
  std::string metric_name = "coverage";
  double at = -5.0;
  int figure = 0;
  double tolerance = 0.03;

  auto* cov = app.add_subcommand("coverage", "coverage CCDF over SINR thresholds (dB)");
  add_common(cov, common);
  cov->add_option("--from", from, "first threshold in dB")->default_val(-10.0);
  cov->add_option("--to", to, "last threshold in dB")->default_val(20.0);
  cov->add_option("--step", step, "threshold step in dB")->default_val(1.0);

  auto* thr = app.add_subcommand("throughput", "rate CCDF over log-spaced rates (bps)");
  add_common(thr, common);
  double rate_lo = 1e-3, rate_hi = 10.0;
  thr->add_option("--from", rate_lo, "smallest rate")->default_val(1e-3);
  thr->add_option("--to", rate_hi, "largest rate")->default_val(10.0);
  thr->add_option("--points", points, "grid points")->default_val(41);

  auto* sweep = app.add_subcommand("sweep", "coverage or rate CCDF at a fixed threshold over D or density ratio");
  add_common(sweep, common);
  sweep->add_option("--axis", axis_name, "inner_radius_m or density_ratio")->default_val("inner_radius_m");
  sweep->add_option("--metric", metric_name, "coverage or throughput")->default_val("coverage");
  sweep->add_option("--at", at, "SINR threshold in dB, or rate in bps")->default_val(-5.0);
  double sfrom = 100.0, sto = 1000.0, sstep = 50.0;
  sweep->add_option("--from", sfrom, "first axis value")->default_val(100.0);
  sweep->add_option("--to", sto, "last axis value")->default_val(1000.0);
  sweep->add_option("--step", sstep, "axis step")->default_val(50.0);

  auto* fig = app.add_subcommand("figure", "reproduce one figure of the numerical study (2-7)");
  add_common(fig, common);
  fig->add_option("number", figure, "figure number")->required()->check(CLI::Range(2, 7));

  auto* val = app.add_subcommand("validate", "compare analytic and Monte Carlo coverage curves");
  add_common(val, common);
  val->add_option("--tolerance", tolerance, "largest accepted gap")->default_val(0.03);

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentSpec spec = base_spec(common);
    if (cov->parsed()) {
      spec.axis = SweepAxis::SinrThresholdDb;
      spec.grid = linear_grid(from, to, step);
      return run_specs({spec}, common.out);
    }
    if (thr->parsed()) {
      spec.axis = SweepAxis::RateBps;
      spec.grid = log_grid(rate_lo, rate_hi, points);
      return run_specs({spec}, common.out);
    }
    if (sweep->parsed()) {
      const auto axis = parse_axis(axis_name);
      if (!axis || (*axis != SweepAxis::InnerRadiusM && *axis != SweepAxis::DensityRatio)) {
        throw ConfigError("sweep axis must be inner_radius_m or density_ratio");
      }
      if (metric_name != "coverage" && metric_name != "throughput") {
        throw ConfigError("metric must be coverage or throughput");
      }
      spec.axis = *axis;
      spec.metric = metric_name == "coverage" ? Metric::Coverage : Metric::Throughput;
      spec.fixed_value = at;
      spec.grid = linear_grid(sfrom, sto, sstep);
      return run_specs({spec}, common.out);
    }
    if (fig->parsed()) {
      auto specs = figure_preset(figure, spec.methods, spec.sim);
      if (!common.scenarios.empty()) {
        for (auto& s : specs) {
          std::erase_if(s.scenarios, [&spec](Scenario x) {
            return std::find(spec.scenarios.begin(), spec.scenarios.end(), x) == spec.scenarios.end();
          });
        }
      }
      return run_specs(specs, common.out);
    }
    return run_validate(spec, tolerance);
  } catch (const ConfigIoError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kOutput;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
}
