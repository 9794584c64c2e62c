#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace hetnet {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  std::size_t max_subdivisions = 200;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

/// Thrown when the subdivision budget runs out before the tolerance is met.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// b may be +infinity; the tail is then mapped onto [0, 1) with
/// x = a + t / (1 - t) and seeded with dyadic panels so that integrands
/// living on any length scale between ~1 and ~1e12 are resolved.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSettings& settings = {});

struct SeriesSettings {
  double tail_tol = 1e-8;
  std::size_t max_terms = 2000;

  void validate() const;
};

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool truncated = false;  // max_terms reached before the tail bound held
};

/// Sums term(0) + term(1) + ... for nonnegative, eventually decreasing terms.
/// Stops once term(n) / (1 - r) < tail_tol where r = term(n) / term(n - 1) < 1,
/// or as soon as a term is exactly zero.
SeriesResult sum_series(const std::function<double(std::size_t)>& term, const SeriesSettings& settings = {});

}  // namespace hetnet
