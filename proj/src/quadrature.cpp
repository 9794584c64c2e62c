#include "hetnet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hetnet {

namespace {

// Kronrod abscissae and weights for the 15-point rule, with the embedded
// 7-point Gauss weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const noexcept { return x.error < y.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

template <class F>
QuadratureResult adaptive(const F& f, const std::vector<double>& edges, const QuadratureSettings& s) {
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Panel p = gauss_kronrod(f, edges[i], edges[i + 1]);
    total += p.value;
    error += p.error;
    heap.push(p);
  }

  auto tolerance = [&] { return std::max(s.abs_tol, s.rel_tol * std::abs(total)); };
  while (error > tolerance()) {
    if (heap.size() >= s.max_subdivisions) {
      throw QuadratureError("integrate: no convergence within max_subdivisions", {total, error, heap.size()});
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("integrate: interval collapsed below machine resolution", {total, error, heap.size()});
    }
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Final value is re-summed from the surviving panels.
  QuadratureResult result;
  result.intervals = heap.size();
  while (!heap.empty()) {
    result.value += heap.top().value;
    result.error_estimate += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(result.value)) {
    throw QuadratureError("integrate: non-finite integrand value", result);
  }
  return result;
}

constexpr int kTailPanels = 40;

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be > 0");
  if (max_subdivisions == 0) throw std::invalid_argument("max_subdivisions must be > 0");
}

void SeriesSettings::validate() const {
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail_tol must be > 0");
  if (max_terms == 0) throw std::invalid_argument("max_terms must be > 0");
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSettings& settings) {
  settings.validate();
  if (std::isnan(a) || std::isnan(b) || std::isinf(a)) throw std::invalid_argument("integrate: bad limits");
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, settings);
    r.value = -r.value;
    return r;
  }

  if (std::isfinite(b)) return adaptive(f, {a, b}, settings);

  auto mapped = [&](double t) {
    const double u = 1.0 - t;
    const double x = a + t / u;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (u * u);
  };
  std::vector<double> edges;
  edges.reserve(kTailPanels + 2);
  edges.push_back(0.0);
  for (int k = 1; k <= kTailPanels; ++k) edges.push_back(1.0 - std::ldexp(1.0, -k));
  edges.push_back(1.0);
  return adaptive(mapped, edges, settings);
}

SeriesResult sum_series(const std::function<double(std::size_t)>& term, const SeriesSettings& settings) {
  settings.validate();
  SeriesResult result;
  double previous = 0.0;
  for (std::size_t n = 0; n < settings.max_terms; ++n) {
    const double t = term(n);
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("sum_series: term is negative or not finite");
    result.value += t;
    result.terms_used = n + 1;
    if (t == 0.0) return result;
    if (n > 0 && previous > 0.0) {
      const double ratio = t / previous;
      if (ratio < 1.0 && t / (1.0 - ratio) < settings.tail_tol) return result;
    }
    previous = t;
  }
  result.truncated = true;
  return result;
}

}  // namespace hetnet
