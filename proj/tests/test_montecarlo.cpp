#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "hetnet/analytic.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/statistics.hpp"

using namespace hetnet;

namespace {

constexpr double kPi = std::numbers::pi;

SimSettings small_window(std::size_t trials, std::uint64_t seed = 1) {
  SimSettings s;
  s.window_radius_m = 4000.0;
  s.trials = trials;
  s.seed = seed;
  return s;
}

bool same_points(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x || a[i].y != b[i].y) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("window settings") {
  const NetworkConfig c = paper_config(Scenario::NonUniformI, 10.0, 500.0);
  SimSettings s;
  CHECK(s.resolved_window(c) == doctest::Approx(std::sqrt(500.0 / (kPi * 1e-6))));
  CHECK_NOTHROW(s.validate(c));
  s.window_radius_m = 2000.0;
  CHECK_THROWS_AS(s.validate(c), ConfigError);
  s.window_radius_m = 4000.0;
  s.trials = 0;
  CHECK_THROWS_AS(s.validate(c), ConfigError);
}

TEST_CASE("fixed seed gives the same realization, other seeds do not") {
  const NetworkConfig c = paper_config(Scenario::NonUniformII, 10.0, 500.0);
  const auto a = sample_realization(c, small_window(1, 9), 17);
  const auto b = sample_realization(c, small_window(1, 9), 17);
  const auto other = sample_realization(c, small_window(1, 10), 17);
  CHECK(same_points(a.macro_points, b.macro_points));
  CHECK(same_points(a.small_points, b.small_points));
  CHECK(same_points(a.user_points, b.user_points));
  CHECK_FALSE(same_points(a.macro_points, other.macro_points));
  CHECK(a.user_points.front().x == 0.0);
  CHECK(a.user_points.front().y == 0.0);
}

TEST_CASE("MacroOnly has no small cells") {
  const auto r = sample_realization(paper_config(Scenario::MacroOnly), small_window(1), 0);
  CHECK(r.small_points.empty());
  CHECK(r.small_parent_points.empty());
}

TEST_CASE("hole carving keeps exactly the parents farther than D from every macro") {
  const NetworkConfig c = paper_config(Scenario::NonUniformI, 10.0, 500.0);
  for (std::uint64_t t = 0; t < 30; ++t) {
    const auto r = sample_realization(c, small_window(1, 4), t);
    std::size_t expected = 0;
    for (const auto& s : r.small_parent_points) {
      bool clear = true;
      for (const auto& m : r.macro_points) {
        const double d2 = (s.x - m.x) * (s.x - m.x) + (s.y - m.y) * (s.y - m.y);
        clear = clear && d2 > 500.0 * 500.0;
      }
      expected += clear;
    }
    CHECK(expected == r.small_points.size());
    for (const auto& s : r.small_points) {
      for (const auto& m : r.macro_points) {
        REQUIRE((s.x - m.x) * (s.x - m.x) + (s.y - m.y) * (s.y - m.y) > 500.0 * 500.0);
      }
    }
  }
}

TEST_CASE("surviving small-cell fraction matches the void probability") {
  const NetworkConfig c = paper_config(Scenario::NonUniformI, 10.0, 500.0);
  SimSettings s = small_window(1, 2);
  s.window_radius_m = 2900.0;
  // Only parents at least D inside the window see every macro that could carve them.
  const double inside2 = (2900.0 - 500.0) * (2900.0 - 500.0);
  const std::size_t trials = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto r = sample_realization(c, s, t);
    double parents = 0, kept = 0;
    for (const auto& p : r.small_parent_points) parents += squared_norm(p) <= inside2;
    for (const auto& p : r.small_points) kept += squared_norm(p) <= inside2;
    const double f = kept / parents;
    sum += f;
    sum2 += f * f;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum2 / trials - mean * mean) / trials);
  const double expect = std::exp(-kPi * 1e-6 * 500.0 * 500.0);
  CHECK(expect == doctest::Approx(0.4559).epsilon(1e-3));
  CHECK(std::abs(mean - expect) < 3 * se);
}

TEST_CASE("association: single macro, equal powers, loads") {
  NetworkConfig c = paper_config(Scenario::Uniform);
  NetworkRealization r;
  r.window_radius_m = 1000.0;
  r.macro_points = {{300.0, 0.0}};
  r.user_points = {{0, 0}, {10, 10}, {-500, 200}, {900, -100}};
  auto a = associate_and_load(r, c);
  CHECK(a.macro_load == std::vector<std::uint32_t>{4});
  for (auto t : a.user_tier) CHECK(t == Tier::Macro);

  c.p_tx_small = c.p_tx_macro;
  r.small_points = {{-100.0, 0.0}, {0.0, 250.0}};
  a = associate_and_load(r, c);
  // Plain nearest neighbour.
  CHECK(a.user_tier[0] == Tier::Small);
  CHECK(a.user_serving[0] == 0);
  CHECK(a.user_tier[3] == Tier::Macro);
  std::uint32_t total = a.macro_load[0];
  for (auto l : a.small_load) total += l;
  CHECK(total == r.user_points.size());

  // Equal received power goes to the macro tier.
  r.small_points = {{-300.0, 0.0}};
  r.user_points = {{0, 0}};
  a = associate_and_load(r, c);
  CHECK(a.user_tier[0] == Tier::Macro);
}

TEST_CASE("no interferers: SINR is exponential around the mean SNR") {
  NetworkConfig c = paper_config(Scenario::MacroOnly);
  NetworkRealization r;
  r.window_radius_m = 1000.0;
  r.macro_points = {{400.0, 0.0}};
  r.user_points = {{0, 0}};
  r = associate_and_load(r, c);
  const double snr = c.macro_power() * std::pow(400.0, -4.0) / c.noise_power();
  std::mt19937_64 rng(1);
  std::vector<double> x(20000);
  for (auto& v : x) v = sample_sinr(r, c, rng) / snr;
  CHECK(ks_distance(x, [](double v) { return v <= 0 ? 0.0 : -std::expm1(-v); }) < ks_critical_value(x.size()));
  CHECK(conditional_coverage(r, c, 2.0) == doctest::Approx(std::exp(-2.0 / snr)));
}

TEST_CASE("results do not depend on the number of worker threads") {
  const NetworkConfig c = paper_config(Scenario::NonUniformI, 10.0, 500.0);
  SimSettings one = small_window(200, 77);
  SimSettings many = one;
  many.parallel_streams = 3;
  const auto a = run_trials(c, one);
  const auto b = run_trials(c, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sinr == b[i].sinr);
    CHECK(a[i].serving_load == b[i].serving_load);
  }
}

TEST_CASE("HETNET_SG_THREADS caps the worker count") {
  SimSettings s = small_window(100);
  s.parallel_streams = 8;
  setenv("HETNET_SG_THREADS", "2", 1);
  CHECK(effective_threads(s) == 2);
  unsetenv("HETNET_SG_THREADS");
  CHECK(effective_threads(s) == 8);
}

TEST_CASE("doubling the window barely moves coverage") {
  // Same realization seen through R and 2R, fading averaged exactly.
  const double r = 4000.0;
  for (auto sc : {Scenario::MacroOnly, Scenario::Uniform, Scenario::NonUniformI, Scenario::NonUniformII}) {
    const NetworkConfig c = paper_config(sc, 10.0, 500.0);
    SimSettings s = small_window(1, 3);
    s.window_radius_m = 2 * r;
    const int n = 300;
    for (double db : {-5.0, 5.0, 20.0}) {
      double diff = 0.0;
      for (int i = 0; i < n; ++i) {
        auto full = sample_realization(c, s, i);
        const auto cut = associate_and_load(restrict_window(full, r), c);
        full = associate_and_load(std::move(full), c);
        diff += conditional_coverage(cut, c, db_to_linear(db)) - conditional_coverage(full, c, db_to_linear(db));
      }
      CAPTURE(static_cast<int>(sc));
      CAPTURE(db);
      CHECK(std::abs(diff / n) < 0.005);
    }
  }
}

TEST_CASE("coverage estimate: monotone, regional split, interval scaling, macro-only agreement") {
  const NetworkConfig c = paper_config(Scenario::MacroOnly);
  std::vector<double> grid;
  for (double db = -10; db <= 20; db += 2) grid.push_back(db);
  const auto small = estimate_coverage_ccdf(c, small_window(1000, 5), grid);
  const auto big = estimate_coverage_ccdf(c, small_window(10000, 5), grid);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(big.overall.values[i] <= big.overall.values[i - 1]);
  CHECK(big.overall.has_confidence());
  CHECK(big.inner.size() + big.outer.size() > 0);
  const std::size_t mid = 2;  // -6 dB
  const double w1 = small.overall.ci_high[mid] - small.overall.ci_low[mid];
  const double w2 = big.overall.ci_high[mid] - big.overall.ci_low[mid];
  CHECK(w1 / w2 == doctest::Approx(std::sqrt(10.0)).epsilon(0.15));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(big.overall.values[i] - analytic_coverage(c, db_to_linear(grid[i]))) < 0.02);
  }
}

TEST_CASE("throughput estimate: zero rate, lone user reduces to coverage") {
  NetworkConfig c = paper_config(Scenario::Uniform);
  c.lambda_users = 1e-12;
  const auto out = run_trials(c, small_window(2000, 8));
  const std::vector<double> rates{1e-9, 0.1, 1.0};
  const auto thr = throughput_curves(out, c, rates);
  CHECK(thr.overall.values[0] == doctest::Approx(1.0).epsilon(1e-3));
  std::vector<double> dbs;
  for (double r : rates) dbs.push_back(linear_to_db(std::exp2(r) - 1.0));
  const auto cov = coverage_curves(out, c, dbs);
  for (std::size_t i = 1; i < rates.size(); ++i) CHECK(thr.overall.values[i] == cov.overall.values[i]);
  for (const auto& o : out) CHECK(o.serving_load >= 1);
}

TEST_CASE("uniform worst-10% rate is near 0.025 bps") {
  const NetworkConfig c = paper_config(Scenario::Uniform);
  const auto out = run_trials(c, small_window(20000, 12));
  std::vector<double> rates;
  for (const auto& o : out) rates.push_back(o.rate_bps);
  std::sort(rates.begin(), rates.end());
  const double q10 = rates[rates.size() / 10];
  CHECK(q10 == doctest::Approx(0.025).epsilon(0.15));
}
