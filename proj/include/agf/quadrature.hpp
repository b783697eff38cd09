#pragma once

// Globally adaptive Gauss-Kronrod (G7/K15) quadrature on finite intervals and
// the integrals I_m, J_m, L_m behind the connection constants f and g.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "agf/errors.hpp"

namespace agf {

template <class Real = double>
struct QuadratureResult {
  Real value = 0;
  Real error_estimate = 0;
  int subdivisions = 0;
};

struct QuadratureOptions {
  double tolerance = 1e-13;
  int max_subdivisions = 4000;
};

namespace detail {

template <class Real>
struct Panel {
  Real a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Real, class F>
Panel<Real> kronrod_panel(F& f, Real a, Real b) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& x = gauss_kronrod<Real, 15>::abscissa();
  const auto& wk = gauss_kronrod<Real, 15>::weights();
  const auto& wg = gauss<Real, 7>::weights();
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  const Real f0 = f(mid);
  Real kronrod = wk[0] * f0;
  Real gauss_sum = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Real pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    kronrod += wk[i] * pair;
    if (i % 2 == 0) gauss_sum += wg[i / 2] * pair;
  }
  using std::abs;
  return {a, b, kronrod * half, abs((kronrod - gauss_sum) * half)};
}

}  // namespace detail

/// Integral of f over [a, b]; splits the panel with the largest |K15 - G7|
/// until the summed estimate drops below opts.tolerance.
template <class Real = double, class F>
QuadratureResult<Real> integrate(F f, Real a, Real b, const QuadratureOptions& opts = {}) {
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  std::priority_queue<detail::Panel<Real>> panels;
  panels.push(detail::kronrod_panel(f, a, b));
  Real total_error = panels.top().error;
  int splits = 0;
  while (total_error > Real(opts.tolerance) && splits < opts.max_subdivisions) {
    auto worst = panels.top();
    panels.pop();
    const Real mid = (worst.a + worst.b) / 2;
    auto left = detail::kronrod_panel(f, worst.a, mid);
    auto right = detail::kronrod_panel(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++splits;
  }
  QuadratureResult<Real> out;
  out.subdivisions = splits;
  // re-sum from scratch so the running error update does not drift
  while (!panels.empty()) {
    out.value += panels.top().value;
    out.error_estimate += panels.top().error;
    panels.pop();
  }
  if (out.error_estimate > Real(opts.tolerance)) {
    throw non_convergence("integrate: tolerance not reached within the subdivision limit");
  }
  return out;
}

/// I_m = int_0^1 t^m e^t dt, real m >= 0.
template <class Real = double>
QuadratureResult<Real> quad_I(Real m, const QuadratureOptions& opts = {}) {
  if (m < 0) throw std::invalid_argument("quad_I: m must be >= 0");
  using std::exp;
  using std::pow;
  return integrate<Real>([m](Real t) { return (m == 0 ? Real(1) : pow(t, m)) * exp(t); }, Real(0), Real(1), opts);
}

/// J_0 = 1; J_m = int_0^1 m t^{m-1} (1-t) e^t dt for m >= 1.
template <class Real = double>
QuadratureResult<Real> quad_J(int m, const QuadratureOptions& opts = {}) {
  if (m < 0) throw std::invalid_argument("quad_J: m must be >= 0");
  if (m == 0) return {Real(1), Real(0), 0};
  using std::exp;
  using std::pow;
  const Real mr = m;
  return integrate<Real>([mr](Real t) { return mr * pow(t, mr - 1) * (1 - t) * exp(t); }, Real(0), Real(1), opts);
}

/// L_0 = 1; L_m = int_0^1 m t^{m-1} sqrt((1-t)/(1+t)) dt, integrated after
/// t = 1 - s^2 as int_0^1 2 m s^2 (1-s^2)^{m-1} / sqrt(2-s^2) ds.
template <class Real = double>
QuadratureResult<Real> quad_L(int m, const QuadratureOptions& opts = {}) {
  if (m < 0) throw std::invalid_argument("quad_L: m must be >= 0");
  if (m == 0) return {Real(1), Real(0), 0};
  using std::pow;
  using std::sqrt;
  const Real mr = m;
  return integrate<Real>(
      [mr](Real s) {
        const Real s2 = s * s;
        return 2 * mr * s2 * pow(1 - s2, mr - 1) / sqrt(2 - s2);
      },
      Real(0), Real(1), opts);
}

}  // namespace agf
