// Acceptance checks. Prints one PASS/FAIL line per check and exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/analytic_nonuniform.hpp"
#include "hetnet/analytic_uniform.hpp"
#include "hetnet/experiments.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/special_functions.hpp"
#include "hetnet/statistics.hpp"

using namespace hetnet;

namespace {

using clk = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d %s: %s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

constexpr std::size_t kTrials = 100000;
constexpr double kWindow = 4000.0;

SimSettings mc_settings(std::uint64_t seed) {
  SimSettings s;
  s.window_radius_m = kWindow;
  s.trials = kTrials;
  s.seed = seed;
  s.parallel_streams = std::max(1u, std::thread::hardware_concurrency());
  return s;
}

std::vector<double> sinr_grid() { return linear_grid(-10.0, 20.0, 1.0); }

bool non_increasing(const CcdfCurve& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c.values[i] > c.values[i - 1] + 1e-12) return false;
  }
  return true;
}

void criterion1() {
  const auto t0 = clk::now();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / 49.0);
    const double closed = std::sqrt(x) * (std::numbers::pi / 2 - std::atan(1.0 / std::sqrt(x)));
    worst = std::max(worst, std::abs(rho_quadrature(x, 4.0) - closed) / closed);
  }
  const double dt = seconds_since(t0);
  report(1, "rho quadrature vs closed form", worst <= 1e-9 && dt < 1.0,
         fmt("max rel err %.2e over 50 points in [1e-6, 1e6], %.3f s", worst, dt));
}

void criterion2() {
  NetworkConfig c = paper_config(Scenario::MacroOnly);
  c.noise_power_dbm = -std::numeric_limits<double>::infinity();
  c.lambda_users = 1.0;  // every BS carries users
  const double got = analytic_coverage(c, 1.0);
  const double formula = 1.0 / (1.0 + rho(1.0, 4.0));
  report(2, "single-tier noiseless fully-loaded reduction", std::abs(got - formula) <= 1e-5,
         fmt("coverage(T=0 dB) = %.6f, 1/(1+rho(1,4)) = %.6f", got, formula));
}

void criterion3() {
  double worst = 0.0;
  std::vector<double> ts, rates;
  for (int i = 0; i < 20; ++i) ts.push_back(db_to_linear(-10.0 + 30.0 * i / 19.0));
  rates = log_grid(1e-3, 10.0, 20);
  const UniformModel u(paper_config(Scenario::Uniform, 10.0, 0.0));
  for (auto s : {Scenario::NonUniformI, Scenario::NonUniformII}) {
    const NonUniformModel n(paper_config(s, 10.0, 0.0));
    const DerivedDensities d = derive_densities(paper_config(s, 10.0, 0.0));
    worst = std::max({worst, std::abs(d.q1 - u.association().q1), std::abs(d.q2_outer - u.association().q2),
                      std::abs(d.lambda_loaded_macro - u.loaded().macro) / 1e-6,
                      std::abs(d.lambda_loaded_small - u.loaded().small) / 1e-5});
    for (double t : ts) {
      worst = std::max({worst, std::abs(n.coverage_overall(t) - u.coverage(t)),
                        std::abs(n.coverage_outer(t) - u.coverage(t)),
                        std::abs(n.coverage_outer_tier1(t) - u.coverage_tier(Tier::Macro, t)),
                        std::abs(n.coverage_outer_tier2(t) - u.coverage_tier(Tier::Small, t))});
    }
    for (double r : rates) {
      worst = std::max({worst, std::abs(n.throughput_ccdf_overall(r) - u.throughput_ccdf(r)),
                        std::abs(n.throughput_ccdf_outer(r) - u.throughput_ccdf(r))});
    }
  }
  report(3, "D -> 0 reduces to the uniform model", worst <= 1e-6,
         fmt("max |nonuniform - uniform| = %.2e over 20 thresholds, 20 rates, both scenarios", worst));
}

void criterion4() {
  const double p = region_probabilities(paper_config(Scenario::NonUniformI, 10.0, 500.0)).inner;
  report(4, "inner-region fraction", std::abs(p - 0.5441) <= 1e-4, fmt("p_inner(D=500 m) = %.5f", p));
}

void criterion5() {
  const auto t0 = clk::now();
  const double t = db_to_linear(-5.0);
  const double s2 = analytic_coverage(paper_config(Scenario::NonUniformII, 10.0, 600.0), t);
  const double un = analytic_coverage(paper_config(Scenario::Uniform, 10.0, 600.0), t);
  const double mo = analytic_coverage(paper_config(Scenario::MacroOnly, 10.0, 600.0), t);
  const bool ok = s2 >= 0.82 && s2 <= 0.88 && un >= 0.76 && un <= 0.82 && mo >= 0.70 && mo <= 0.76;
  report(5, "coverage anchors at T = -5 dB", ok && seconds_since(t0) < 10.0,
         fmt("NonUniformII(D=600) %.4f, Uniform %.4f, MacroOnly %.4f", s2, un, mo));
}

void criterion6() {
  const auto t0 = clk::now();
  const double u = analytic_rate_quantile(paper_config(Scenario::Uniform, 10.0, 500.0), 0.9);
  const double s2 = analytic_rate_quantile(paper_config(Scenario::NonUniformII, 10.0, 500.0), 0.9);
  const double ratio = s2 / u;
  const bool ok = std::abs(u / 0.025 - 1) <= 0.15 && std::abs(s2 / 0.043 - 1) <= 0.15 && ratio >= 1.45 &&
                  ratio <= 2.0;
  const double dt = seconds_since(t0);
  report(6, "worst-10% rate anchors", ok && dt < 60.0,
         fmt("Uniform %.5f bps, NonUniformII %.5f bps, ratio %.3f, %.1f s", u, s2, ratio, dt));
}

struct McRun {
  NetworkConfig cfg;
  std::vector<TrialOutcome> outcomes;
};

std::map<Scenario, McRun> criterion7() {
  std::map<Scenario, McRun> runs;
  const auto grid = sinr_grid();
  std::uint64_t seed = 7001;
  for (auto s : {Scenario::MacroOnly, Scenario::Uniform, Scenario::NonUniformI, Scenario::NonUniformII}) {
    const auto t0 = clk::now();
    McRun run{paper_config(s, 10.0, 500.0), {}};
    run.outcomes = run_trials(run.cfg, mc_settings(seed++));
    const RegionalCurves mc = coverage_curves(run.outcomes, run.cfg, grid);
    std::vector<Region> regions{Region::Overall};
    if (is_non_uniform(s)) regions = {Region::Overall, Region::Inner, Region::Outer};
    for (Region r : regions) {
      const CcdfCurve a = analytic_coverage_curve(run.cfg, grid, r);
      const CcdfCurve& m = r == Region::Overall ? mc.overall : (r == Region::Inner ? mc.inner : mc.outer);
      const CompareReport rep = compare_report(a, m);
      report(7, std::string("analytic vs MC coverage ") + curve_label(s, r, ""), rep.max_gap <= 0.03,
             fmt("max gap %.4f at %g dB, %.0f%% of points inside the MC 95%% CI, %zu trials, %.0f s",
                 rep.max_gap, rep.threshold_at_max, 100 * rep.fraction_inside_ci, kTrials, seconds_since(t0)));
    }
    runs.emplace(s, std::move(run));
  }
  return runs;
}

double macro_fraction(const std::vector<TrialOutcome>& out) {
  std::size_t m = 0;
  for (const auto& o : out) m += o.tier == Tier::Macro;
  return static_cast<double>(m) / out.size();
}

void criterion8(const McRun& nu1_at_500) {
  std::uint64_t seed = 8001;
  for (double d : {0.0, 300.0, 500.0, 800.0}) {
    const NetworkConfig cfg = paper_config(Scenario::NonUniformI, 10.0, d);
    const double q1 = derive_densities(cfg).q1;
    const double emp = d == 500.0 ? macro_fraction(nu1_at_500.outcomes) : macro_fraction(run_trials(cfg, mc_settings(seed++)));
    report(8, fmt("association probability NonUniformI D=%g m", d), std::abs(emp - q1) <= 0.01,
           fmt("empirical P[macro] %.4f vs Q1 %.4f (gap %.4f, %zu trials)", emp, q1, std::abs(emp - q1), kTrials));
  }
}

void criterion9(const McRun& run) {
  const NonUniformModel m(run.cfg);
  std::vector<double> inner, t1, t2;
  for (const auto& o : run.outcomes) {
    if (o.inner) {
      inner.push_back(o.nearest_macro);
    } else if (o.tier == Tier::Macro) {
      t1.push_back(o.serving_distance);
    } else {
      t2.push_back(o.serving_distance);
    }
  }
  const std::string sc(to_string(run.cfg.scenario));
  auto check = [&](const char* name, std::vector<double>& x, DistanceRegion r) {
    const double ks = ks_distance(x, m.serving_distance_pdf(r).cdf);
    const double crit = ks_critical_value(x.size(), 0.01);
    report(9, sc + " serving distance " + name, ks < 0.02,
           fmt("KS %.4f on %zu samples (1%% critical value %.4f, %s)", ks, x.size(), crit,
               ks < crit ? "KS test passes" : "KS test rejects"));
  };
  check("inner", inner, DistanceRegion::Inner);
  check("outer macro", t1, DistanceRegion::OuterTier1);
  check("outer small", t2, DistanceRegion::OuterTier2);
}

void criterion10(const std::map<Scenario, McRun>& runs) {
  // Monotone curves: analytic figure presets plus MC coverage and rate curves.
  {
    std::size_t curves = 0;
    bool ok = true;
    for (int f : {2, 3, 5, 6}) {
      for (const auto& spec : figure_preset(f, {Method::Analytic}, SimSettings{})) {
        for (const auto& c : run_experiment(spec).curves) {
          ok = ok && non_increasing(c);
          ++curves;
        }
      }
    }
    const auto rates = log_grid(1e-3, 10.0, 41);
    for (const auto& [s, run] : runs) {
      for (const RegionalCurves& rc :
           {coverage_curves(run.outcomes, run.cfg, sinr_grid()), throughput_curves(run.outcomes, run.cfg, rates)}) {
        for (const CcdfCurve* c : {&rc.overall, &rc.inner, &rc.outer}) {
          ok = ok && non_increasing(*c);
          curves += c->size() > 0;
        }
      }
    }
    report(10, "CCDF monotonicity", ok, fmt("%zu emitted curves checked", curves));
  }
  // PMF normalisation.
  {
    double worst = 0.0;
    for (double ratio : {0.05, 0.5, 1.0, 2.0, 6.67, 10.0, 20.0, 100.0}) {
      for (auto pmf : {&pmf_users_random_cell, &pmf_users_sharing_cell}) {
        double sum = 0.0;
        for (std::size_t n = 0; n < 10000 && sum < 1 - 1e-9; ++n) sum += pmf(n, ratio * 1e-6, 1e-6);
        worst = std::max(worst, std::abs(1.0 - sum));
      }
    }
    report(10, "PMF normalisation", worst <= 1e-8, fmt("max |1 - sum| = %.2e", worst));
  }
  // Hole process.
  {
    std::size_t kept = 0, removed = 0;
    bool ok = true;
    for (auto s : {Scenario::NonUniformI, Scenario::NonUniformII}) {
      const NetworkConfig cfg = paper_config(s, 10.0, 500.0);
      SimSettings sim = mc_settings(10001);
      for (std::uint64_t t = 0; t < 200; ++t) {
        const auto r = sample_realization(cfg, sim, t);
        std::size_t clear = 0;
        for (const auto& p : r.small_parent_points) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& m : r.macro_points) best = std::min(best, std::hypot(p.x - m.x, p.y - m.y));
          clear += best > cfg.inner_radius_m;
        }
        for (const auto& p : r.small_points) {
          for (const auto& m : r.macro_points) ok = ok && std::hypot(p.x - m.x, p.y - m.y) > cfg.inner_radius_m;
        }
        ok = ok && clear == r.small_points.size();
        kept += r.small_points.size();
        removed += r.small_parent_points.size() - r.small_points.size();
      }
    }
    report(10, "hole-process exclusion", ok,
           fmt("400 realizations, %zu kept / %zu removed small BSs checked against every macro", kept, removed));
  }
  // Determinism.
  {
    ExperimentSpec spec = figure_preset(2, {Method::Analytic, Method::MonteCarlo}, mc_settings(5))[0];
    spec.sim.trials = 2000;
    spec.sim.parallel_streams = 1;
    std::ostringstream a, b;
    write_csv(a, spec.axis, run_experiment(spec).curves);
    spec.sim.parallel_streams = 4;
    write_csv(b, spec.axis, run_experiment(spec).curves);
    report(10, "seed determinism", a.str() == b.str() && !a.str().empty(),
           fmt("figure-2 CSV with 1 and 4 workers, %zu bytes, identical: %s", a.str().size(),
               a.str() == b.str() ? "yes" : "no"));
  }
  // Scenario-II vs Uniform over D.
  {
    double worst = std::numeric_limits<double>::infinity();
    double at = 0.0;
    const double t = db_to_linear(-5.0);
    const double u = analytic_coverage(paper_config(Scenario::Uniform, 10.0, 500.0), t);
    for (double d = 300.0; d <= 700.0; d += 50.0) {
      const double s2 = analytic_coverage(paper_config(Scenario::NonUniformII, 10.0, d), t);
      if (s2 - u < worst) worst = s2 - u, at = d;
    }
    report(10, "Scenario-II >= Uniform - 0.005 at T = -5 dB, D in [300, 700] m", worst >= -0.005,
           fmt("min (NonUniformII - Uniform) = %+.4f at D = %g m", worst, at));
  }
}

}  // namespace

int main() {
  const auto t0 = clk::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  const auto runs = criterion7();
  criterion8(runs.at(Scenario::NonUniformI));
  criterion9(runs.at(Scenario::NonUniformI));
  criterion9(runs.at(Scenario::NonUniformII));
  criterion10(runs);
  std::printf("%d failing check(s), %.0f s total\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
