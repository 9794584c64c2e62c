#include "hetnet/config_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hetnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("not a number: '" + std::string(v) + "'");
  return out;
}

template <class U>
U to_unsigned(std::string_view v) {
  U out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError("not a non-negative integer: '" + std::string(v) + "'");
  }
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"p_tx_macro", [](RunConfig& c, std::string_view v) { c.network.p_tx_macro = to_double(v); }},
      {"p_tx_small", [](RunConfig& c, std::string_view v) { c.network.p_tx_small = to_double(v); }},
      {"path_loss_exponent", [](RunConfig& c, std::string_view v) { c.network.path_loss_exponent = to_double(v); }},
      {"path_loss_const_db", [](RunConfig& c, std::string_view v) { c.network.path_loss_const_db = to_double(v); }},
      {"lambda_macro", [](RunConfig& c, std::string_view v) { c.network.lambda_macro = to_double(v); }},
      {"lambda_small_nominal",
       [](RunConfig& c, std::string_view v) { c.network.lambda_small_nominal = to_double(v); }},
      {"lambda_users", [](RunConfig& c, std::string_view v) { c.network.lambda_users = to_double(v); }},
      {"noise_power_dbm", [](RunConfig& c, std::string_view v) { c.network.noise_power_dbm = to_double(v); }},
      {"bandwidth_hz", [](RunConfig& c, std::string_view v) { c.network.bandwidth_hz = to_double(v); }},
      {"inner_radius_m", [](RunConfig& c, std::string_view v) { c.network.inner_radius_m = to_double(v); }},
      {"scenario",
       [](RunConfig& c, std::string_view v) {
         const auto s = parse_scenario(v);
         if (!s) throw ConfigError("unknown scenario '" + std::string(v) + "'");
         c.network.scenario = *s;
       }},
      {"window_radius_m", [](RunConfig& c, std::string_view v) { c.sim.window_radius_m = to_double(v); }},
      {"trials", [](RunConfig& c, std::string_view v) { c.sim.trials = to_unsigned<std::size_t>(v); }},
      {"seed", [](RunConfig& c, std::string_view v) { c.sim.seed = to_unsigned<std::uint64_t>(v); }},
      {"parallel_streams",
       [](RunConfig& c, std::string_view v) { c.sim.parallel_streams = to_unsigned<unsigned>(v); }},
  };
  return table;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, RunConfig base, std::string_view source) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + std::string(key) + "'");
    if (!seen.emplace(key).second) throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
    if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");
    base.assigned.emplace_back(key);
    try {
      it->second(base, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  // A MacroOnly file may leave the default small-cell density in place.
  if (base.network.scenario == Scenario::MacroOnly && !seen.contains("lambda_small_nominal")) {
    base.network.lambda_small_nominal = 0.0;
  }
  base.network.validate();
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigIoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base), path);
}

std::string format_config(const RunConfig& cfg) {
  const auto& n = cfg.network;
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "p_tx_macro = %.17g\np_tx_small = %.17g\npath_loss_exponent = %.17g\npath_loss_const_db = %.17g\n"
                "lambda_macro = %.17g\nlambda_small_nominal = %.17g\nlambda_users = %.17g\n"
                "noise_power_dbm = %.17g\nbandwidth_hz = %.17g\ninner_radius_m = %.17g\nscenario = %s\n"
                "window_radius_m = %.17g\ntrials = %zu\nseed = %llu\nparallel_streams = %u\n",
                n.p_tx_macro, n.p_tx_small, n.path_loss_exponent, n.path_loss_const_db, n.lambda_macro,
                n.lambda_small_nominal, n.lambda_users, n.noise_power_dbm, n.bandwidth_hz, n.inner_radius_m,
                std::string(to_string(n.scenario)).c_str(), cfg.sim.window_radius_m, cfg.sim.trials,
                static_cast<unsigned long long>(cfg.sim.seed), cfg.sim.parallel_streams);
  return buf;
}

}  // namespace hetnet
