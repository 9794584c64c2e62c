#include "hetnet/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hetnet/quadrature.hpp"

namespace hetnet {

namespace {

const QuadratureSettings kRhoQuadrature{1e-13, 1e-300, 400};

void check_alpha(double alpha) {
  if (!(alpha > 2.0)) throw std::domain_error("rho: path loss exponent must exceed 2");
}

void check_densities(double lambda_users, double lambda_eq) {
  if (!(lambda_users >= 0.0) || !(lambda_eq > 0.0)) {
    throw std::domain_error("user-count pmf: densities must be positive");
  }
}

// log of b^q / n! * Gamma(n + q + shift) / Gamma(q) * r^n / (b + r)^(n + q + shift), r = lambda_users / lambda_eq.
double log_pmf(std::size_t n, double ratio, double shift) {
  constexpr double q = CellAreaModel::q;
  constexpr double b = CellAreaModel::b;
  const double nn = static_cast<double>(n);
  double out = q * std::log(b) - std::lgamma(nn + 1.0) + std::lgamma(nn + q + shift) - std::lgamma(q)
               - (nn + q + shift) * std::log(b + ratio);
  if (n > 0) out += nn * std::log(ratio);
  return out;
}

double pmf(std::size_t n, double lambda_users, double lambda_eq, double shift) {
  check_densities(lambda_users, lambda_eq);
  const double ratio = lambda_users / lambda_eq;
  if (ratio == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(log_pmf(n, ratio, shift));
}

}  // namespace

double rho_closed_form_alpha4(double x) {
  if (!(x >= 0.0)) throw std::domain_error("rho: argument must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  const double s = std::sqrt(x);
  // Equal to s * (pi/2 - atan(1/s)) without the cancellation for small x.
  return s * std::atan(s);
}

double rho_quadrature(double x, double alpha) {
  check_alpha(alpha);
  if (!(x >= 0.0)) throw std::domain_error("rho: argument must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  const double half_alpha = 0.5 * alpha;
  const double m = half_alpha - 1.0;           // v = t^m
  const double p = half_alpha / m;             // 1 + t^(alpha/2) = 1 + v^p
  const double scale = std::pow(x, 2.0 / alpha);
  const double lower = 1.0 / scale;            // x^(-2/alpha)

  auto head = [half_alpha](double u) { return 1.0 / (1.0 + std::pow(u, half_alpha)); };
  auto tail = [p](double v) { return 1.0 / (1.0 + std::pow(v, p)); };

  if (lower >= 1.0) {
    // Whole range lies in u >= 1: int_lower^inf du/(1+u^(a/2)) = (1/m) int_0^(lower^-m) dv/(1+v^p).
    const double vmax = std::pow(lower, -m);
    return scale * integrate(tail, 0.0, vmax, kRhoQuadrature).value / m;
  }
  const double near = integrate(head, lower, 1.0, kRhoQuadrature).value;
  const double far = integrate(tail, 0.0, 1.0, kRhoQuadrature).value / m;
  return scale * (near + far);
}

double rho(double x, double alpha) {
  check_alpha(alpha);
  if (alpha == 4.0) return rho_closed_form_alpha4(x);
  return rho_quadrature(x, alpha);
}

double pmf_users_random_cell(std::size_t n, double lambda_users, double lambda_eq) {
  return pmf(n, lambda_users, lambda_eq, 0.0);
}

double pmf_users_sharing_cell(std::size_t n, double lambda_users, double lambda_eq) {
  return pmf(n, lambda_users, lambda_eq, 1.0);
}

double prob_unloaded(double lambda_users, double lambda_eq) {
  check_densities(lambda_users, lambda_eq);
  if (std::isinf(lambda_eq)) return 1.0;
  constexpr double b = CellAreaModel::b;
  return std::pow(b * lambda_eq / (lambda_users + b * lambda_eq), CellAreaModel::q);
}

}  // namespace hetnet
