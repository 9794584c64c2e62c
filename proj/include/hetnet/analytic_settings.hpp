#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hetnet/quadrature.hpp"

namespace hetnet {

struct AnalyticSettings {
  QuadratureSettings quadrature{1e-10, 1e-14, 400};
  SeriesSettings series{1e-8, 2000};
  /// Coverage integrands are cut where the Gaussian exponent has fallen by this much.
  double gaussian_cutoff = 40.0;
};

/// Collects non-fatal numerical warnings (e.g. truncated series) from analytic evaluations.
struct WarningLog {
  std::vector<std::string> messages;

  void add(std::string message) { messages.push_back(std::move(message)); }
  bool empty() const noexcept { return messages.empty(); }
  std::size_t size() const noexcept { return messages.size(); }
};

}  // namespace hetnet
