#pragma once

#include <cstddef>

namespace hetnet {

/// Gamma fit of the Poisson-Voronoi cell area: f(x) ~ (b y)^q x^(q-1) exp(-b y x) / Gamma(q)
/// for a cell of a PPP with density y.
struct CellAreaModel {
  static constexpr double q = 3.61;
  static constexpr double b = 3.61;
};

/// Interference integral rho(x, alpha) = x^(2/alpha) * int_{x^(-2/alpha)}^inf du / (1 + u^(alpha/2)).
/// Uses the arctan closed form when alpha == 4 and rho_quadrature otherwise.
/// Throws std::domain_error for alpha <= 2 or x < 0.
double rho(double x, double alpha);

/// sqrt(x) * (pi/2 - arctan(1/sqrt(x))), the alpha = 4 case.
double rho_closed_form_alpha4(double x);

/// Generic route: the semi-infinite integral is folded onto [0, 1] with u -> 1/t and
/// then v = t^(alpha/2 - 1), which removes the endpoint singularity for alpha < 4.
double rho_quadrature(double x, double alpha);

/// P[N = n] users in a randomly chosen cell whose area follows the gamma fit
/// for an equivalent BS density lambda_eq. Evaluated through lgamma.
double pmf_users_random_cell(std::size_t n, double lambda_users, double lambda_eq);

/// P[N = n] other users in the cell that contains the typical user (size-biased area).
double pmf_users_sharing_cell(std::size_t n, double lambda_users, double lambda_eq);

/// Probability that a randomly chosen cell holds no user: pmf_users_random_cell(0, ...).
double prob_unloaded(double lambda_users, double lambda_eq);

}  // namespace hetnet
