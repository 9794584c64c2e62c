#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/core_model.hpp"
#include "hetnet/montecarlo.hpp"

// Flat `key = value` configuration. Keys are the NetworkConfig and SimSettings
// field names; `#` starts a comment. Unknown or repeated keys are errors.

namespace hetnet {

struct RunConfig {
  NetworkConfig network;
  SimSettings sim;
  std::vector<std::string> assigned;  // keys set by the parsed text, in file order
};

/// Raised when the file itself cannot be read (as opposed to bad contents).
class ConfigIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the assignments in text on top of base. Throws ConfigError with a line number.
RunConfig parse_config_text(std::string_view text, RunConfig base = {}, std::string_view source = "<config>");
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Inverse of parse_config_text (every key, %.17g).
std::string format_config(const RunConfig& cfg);

}  // namespace hetnet
