#include "hetnet/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "hetnet/statistics.hpp"

namespace hetnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void append_ppp(std::vector<Point2>& out, double density, double radius, std::mt19937_64& rng) {
  if (!(density > 0.0)) return;
  std::poisson_distribution<long long> count(density * kPi * radius * radius);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const long long n = count(rng);
  out.reserve(out.size() + static_cast<std::size_t>(n));
  // Rejection from the bounding square.
  for (long long i = 0; i < n;) {
    const double x = 2.0 * unit(rng) - 1.0;
    const double y = 2.0 * unit(rng) - 1.0;
    if (x * x + y * y >= 1.0) continue;
    out.push_back({radius * x, radius * y});
    ++i;
  }
}

double grid_cell(double density, double radius) {
  // About one point per cell, never finer than the window allows.
  const double c = density > 0.0 ? std::sqrt(1.0 / density) : 2.0 * radius;
  return std::max(c, 2.0 * radius / 2048.0);
}

double small_outer_density(const NetworkConfig& cfg) {
  if (cfg.scenario == Scenario::MacroOnly) return 0.0;
  return effective_small_density(cfg).small_density_in_outer;
}

double threshold_linear(double db) { return db_to_linear(db); }

CcdfCurve empirical_curve(const std::vector<double>& samples, std::span<const double> grid,
                          const NetworkConfig& cfg, Region region, double (*to_axis)(double)) {
  CcdfCurve curve;
  curve.method = Method::MonteCarlo;
  curve.scenario = cfg.scenario;
  curve.region = region;
  if (samples.empty()) return curve;
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  curve.thresholds.assign(grid.begin(), grid.end());
  for (double g : grid) {
    const double t = to_axis(g);
    const auto above = static_cast<std::size_t>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t));
    const BinomialInterval ci = wilson_interval(above, sorted.size());
    curve.values.push_back(ci.estimate);
    curve.ci_low.push_back(ci.low);
    curve.ci_high.push_back(ci.high);
  }
  return curve;
}

template <class Get>
RegionalCurves regional(std::span<const TrialOutcome> outcomes, const NetworkConfig& cfg,
                        std::span<const double> grid, double (*to_axis)(double), Get get) {
  std::vector<double> all, inner, outer;
  all.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    const double v = get(o);
    all.push_back(v);
    (o.inner ? inner : outer).push_back(v);
  }
  return {empirical_curve(all, grid, cfg, Region::Overall, to_axis),
          empirical_curve(inner, grid, cfg, Region::Inner, to_axis),
          empirical_curve(outer, grid, cfg, Region::Outer, to_axis)};
}

double identity(double x) { return x; }

}  // namespace

double SimSettings::resolved_window(const NetworkConfig& cfg) const {
  if (window_radius_m > 0.0) return window_radius_m;
  return std::sqrt(500.0 / (kPi * cfg.lambda_macro));
}

void SimSettings::validate(const NetworkConfig& cfg) const {
  cfg.validate();
  if (trials == 0) throw ConfigError("trials must be positive");
  if (parallel_streams == 0) throw ConfigError("parallel_streams must be positive");
  if (window_radius_m < 0.0 || !std::isfinite(window_radius_m)) throw ConfigError("window_radius_m must be >= 0");
  const double need = 5.0 * std::max(cfg.inner_radius_m, 1.0 / std::sqrt(kPi * cfg.lambda_macro));
  if (resolved_window(cfg) < need) {
    throw ConfigError("window_radius_m must be at least " + std::to_string(need) + " m");
  }
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
                    static_cast<std::uint32_t>(purpose)};
  return std::mt19937_64(seq);
}

NetworkRealization sample_realization(const NetworkConfig& cfg, const SimSettings& sim, std::uint64_t trial_index) {
  auto rng = trial_stream(sim.seed, trial_index, 0);
  const double radius = sim.resolved_window(cfg);
  NetworkRealization real;
  real.window_radius_m = radius;

  append_ppp(real.macro_points, cfg.lambda_macro, radius, rng);

  const double l2 = small_outer_density(cfg);
  std::vector<Point2>& parents = real.small_parent_points;
  append_ppp(parents, l2, radius, rng);
  if (is_non_uniform(cfg.scenario) && cfg.inner_radius_m > 0.0) {
    const double d = cfg.inner_radius_m;
    const SpatialGrid macros(real.macro_points, radius, std::max(d, grid_cell(cfg.lambda_macro, radius)));
    for (const Point2& p : parents) {
      if (!macros.any_within(p, d)) real.small_points.push_back(p);
    }
    for (const Point2& p : real.small_points) {
      if (macros.nearest(p).dist2 <= d * d) throw std::logic_error("small BS retained inside a macro hole");
    }
  } else {
    real.small_points = parents;
  }

  real.user_points.push_back({0.0, 0.0});
  append_ppp(real.user_points, cfg.lambda_users, radius, rng);
  return real;
}

NetworkRealization associate_and_load(NetworkRealization real, const NetworkConfig& cfg) {
  const double radius = real.window_radius_m;
  const double k = std::pow(cfg.small_power() / cfg.macro_power(), 2.0 / cfg.path_loss_exponent);
  const SpatialGrid macros(real.macro_points, radius, grid_cell(cfg.lambda_macro, radius));
  const SpatialGrid smalls(real.small_points, radius, grid_cell(small_outer_density(cfg), radius));

  real.macro_load.assign(real.macro_points.size(), 0);
  real.small_load.assign(real.small_points.size(), 0);
  real.user_tier.resize(real.user_points.size());
  real.user_serving.resize(real.user_points.size());
  for (std::size_t u = 0; u < real.user_points.size(); ++u) {
    const auto m = macros.nearest(real.user_points[u]);
    // P2 r2^-a > P1 r1^-a  <=>  r2^2 < k r1^2, so only small BSs inside sqrt(k) r1 can win.
    const double reach = m.index == SpatialGrid::npos ? kInf : std::sqrt(k * m.dist2);
    const auto s = smalls.nearest_within(real.user_points[u], reach);
    if (m.index == SpatialGrid::npos && s.index == SpatialGrid::npos) {
      throw std::runtime_error("realization has no base station");
    }
    const bool small = s.index != SpatialGrid::npos;
    if (small) {
      real.user_tier[u] = Tier::Small;
      real.user_serving[u] = static_cast<std::uint32_t>(s.index);
      ++real.small_load[s.index];
    } else {
      real.user_tier[u] = Tier::Macro;
      real.user_serving[u] = static_cast<std::uint32_t>(m.index);
      ++real.macro_load[m.index];
    }
  }
  return real;
}

double sample_sinr(const NetworkRealization& real, const NetworkConfig& cfg, std::mt19937_64& rng) {
  if (!real.associated()) throw std::logic_error("sample_sinr needs an associated realization");
  std::exponential_distribution<double> fading(1.0);
  const double alpha = cfg.path_loss_exponent;
  const Tier tier = real.user_tier[0];
  const std::uint32_t serving = real.user_serving[0];
  const auto& load = tier == Tier::Macro ? real.macro_load : real.small_load;
  if (load[serving] == 0) throw std::logic_error("typical user's serving BS is unloaded");

  auto path_gain = [alpha](Point2 p) {
    const double r2 = squared_norm(p);
    return alpha == 4.0 ? 1.0 / (r2 * r2) : std::pow(r2, -0.5 * alpha);
  };

  const Point2 sp = tier == Tier::Macro ? real.macro_points[serving] : real.small_points[serving];
  const double signal = cfg.tier_power(tier) * fading(rng) * path_gain(sp);

  double interference = 0.0;
  auto add_tier = [&](const std::vector<Point2>& pts, const std::vector<std::uint32_t>& loads, double power,
                      Tier t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (loads[i] == 0 || (t == tier && i == serving)) continue;
      sum += fading(rng) * path_gain(pts[i]);
    }
    interference += power * sum;
  };
  add_tier(real.macro_points, real.macro_load, cfg.macro_power(), Tier::Macro);
  add_tier(real.small_points, real.small_load, cfg.small_power(), Tier::Small);
  return signal / (interference + cfg.noise_power());
}

double conditional_coverage(const NetworkRealization& real, const NetworkConfig& cfg, double sinr_threshold) {
  if (!real.associated()) throw std::logic_error("conditional_coverage needs an associated realization");
  const double alpha = cfg.path_loss_exponent;
  const Tier tier = real.user_tier[0];
  const std::uint32_t serving = real.user_serving[0];
  const Point2 sp = tier == Tier::Macro ? real.macro_points[serving] : real.small_points[serving];
  const double signal = cfg.tier_power(tier) * std::pow(squared_norm(sp), -0.5 * alpha);

  double log_p = -sinr_threshold * cfg.noise_power() / signal;
  auto add_tier = [&](const std::vector<Point2>& pts, const std::vector<std::uint32_t>& loads, double power,
                      Tier t) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (loads[i] == 0 || (t == tier && i == serving)) continue;
      log_p -= std::log1p(sinr_threshold * power * std::pow(squared_norm(pts[i]), -0.5 * alpha) / signal);
    }
  };
  add_tier(real.macro_points, real.macro_load, cfg.macro_power(), Tier::Macro);
  add_tier(real.small_points, real.small_load, cfg.small_power(), Tier::Small);
  return std::exp(log_p);
}

NetworkRealization restrict_window(const NetworkRealization& real, double radius) {
  NetworkRealization out;
  out.window_radius_m = radius;
  const double r2 = radius * radius;
  auto keep = [r2](const std::vector<Point2>& in, std::vector<Point2>& dst) {
    for (const Point2& p : in) {
      if (squared_norm(p) <= r2) dst.push_back(p);
    }
  };
  keep(real.macro_points, out.macro_points);
  keep(real.small_points, out.small_points);
  keep(real.small_parent_points, out.small_parent_points);
  keep(real.user_points, out.user_points);
  return out;
}

TrialOutcome run_trial(const NetworkConfig& cfg, const SimSettings& sim, std::uint64_t trial_index) {
  const NetworkRealization real = associate_and_load(sample_realization(cfg, sim, trial_index), cfg);
  auto rng = trial_stream(sim.seed, trial_index, 1);

  TrialOutcome out;
  out.sinr = sample_sinr(real, cfg, rng);
  out.tier = real.user_tier[0];
  const std::uint32_t s = real.user_serving[0];
  const Point2 sp = out.tier == Tier::Macro ? real.macro_points[s] : real.small_points[s];
  out.serving_distance = std::sqrt(squared_norm(sp));
  out.serving_load = out.tier == Tier::Macro ? real.macro_load[s] : real.small_load[s];
  out.rate_bps = cfg.bandwidth_hz / out.serving_load * std::log2(1.0 + out.sinr);

  out.nearest_macro = kInf;
  for (const Point2& p : real.macro_points) out.nearest_macro = std::min(out.nearest_macro, squared_norm(p));
  out.nearest_macro = std::sqrt(out.nearest_macro);
  out.nearest_small = kInf;
  for (const Point2& p : real.small_points) out.nearest_small = std::min(out.nearest_small, squared_norm(p));
  out.nearest_small = std::sqrt(out.nearest_small);
  out.inner = out.nearest_macro <= cfg.inner_radius_m;
  out.small_parent_count = real.small_parent_points.size();
  out.small_kept_count = real.small_points.size();
  return out;
}

unsigned effective_threads(const SimSettings& sim) {
  unsigned n = std::max(1u, sim.parallel_streams);
  if (const char* env = std::getenv("HETNET_SG_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, sim.trials)));
}

std::vector<TrialOutcome> run_trials(const NetworkConfig& cfg, const SimSettings& sim) {
  sim.validate(cfg);
  std::vector<TrialOutcome> outcomes(sim.trials);
  const unsigned workers = effective_threads(sim);
  if (workers == 1) {
    for (std::size_t i = 0; i < sim.trials; ++i) outcomes[i] = run_trial(cfg, sim, i);
    return outcomes;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  constexpr std::size_t kChunk = 64;
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= sim.trials || failed.load()) return;
        const std::size_t end = std::min(sim.trials, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) outcomes[i] = run_trial(cfg, sim, i);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

RegionalCurves coverage_curves(std::span<const TrialOutcome> outcomes, const NetworkConfig& cfg,
                               std::span<const double> thresholds_db) {
  return regional(outcomes, cfg, thresholds_db, &threshold_linear, [](const TrialOutcome& o) { return o.sinr; });
}

RegionalCurves throughput_curves(std::span<const TrialOutcome> outcomes, const NetworkConfig& cfg,
                                 std::span<const double> rates_bps) {
  return regional(outcomes, cfg, rates_bps, &identity, [](const TrialOutcome& o) { return o.rate_bps; });
}

RegionalCurves estimate_coverage_ccdf(const NetworkConfig& cfg, const SimSettings& sim,
                                      std::span<const double> thresholds_db) {
  return coverage_curves(run_trials(cfg, sim), cfg, thresholds_db);
}

RegionalCurves estimate_throughput_ccdf(const NetworkConfig& cfg, const SimSettings& sim,
                                        std::span<const double> rates_bps) {
  return throughput_curves(run_trials(cfg, sim), cfg, rates_bps);
}

}  // namespace hetnet
