#pragma once

// Certificates for the holonomic triangle:
//  * the generating-function ODEs, checked coefficient by coefficient in exact
//    rational arithmetic after clearing the 1/x,
//      e:     x(1-x)U' - U(x^2 - x + 2 - m + m x) - m x^2 = 0
//      pi:    x(1-x^2)V' + V(m - 2 - m x^2 - x) - m x^2 = 0
//      Gamma: x(1-x)W' + (z - 1 - x)W - z x = 0
//  * quadrature chains J_m = I_{m+1}, J_{m+1} = e - (m+2) J_m,
//    L_{m+2} = L_m - L_{m+1}/(m+1), and the links f = J/e, g = sqrt(2/pi) L,
//  * transfer asymptotics u_n(m) ~ f(m) n, v_n(m) ~ g(m) sqrt(n).

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agf/agf.hpp"
#include "agf/exact.hpp"
#include "agf/quadrature.hpp"
#include "agf/recurrence.hpp"
#include "agf/series.hpp"

namespace agf {

struct OdeCheckResult {
  bool pass = false;
  /// Lowest power of x with a nonzero coefficient.
  std::optional<int> first_failure;
};

namespace detail {

/// sum_{n>=1} u_n x^n through x^order, u_n from the recurrence at parameter m.
inline PowerSeries<BigRat> generating_series(const PRecurrence& rec, const BigRat& m, int order) {
  PowerSeries<BigRat> s(order);
  iterate_sequence(rec, m, order, [&](long n, const BigRat& v) {
    if (n >= 0 && n <= order) s[static_cast<int>(n)] = v;
  });
  return s;
}

inline PowerSeries<BigRat> poly_series(std::vector<BigRat> coeffs, int order) {
  return PowerSeries<BigRat>(std::move(coeffs), order);
}

inline OdeCheckResult verdict(const PowerSeries<BigRat>& residual) {
  const int k = residual.first_nonzero();
  if (k < 0) return {true, std::nullopt};
  return {false, k};
}

inline void require_order(int N) {
  if (N < 10) throw std::invalid_argument("ODE certificate: N must be at least 10");
}

}  // namespace detail

/// Checks the e-world ODE for a given series U (coefficients u_0..u_{N+1};
/// the derivative consumes one order).
inline OdeCheckResult ode_series_check_e(const PowerSeries<BigRat>& U, const BigRat& m) {
  const int N = U.order() - 1;
  const auto x = detail::poly_series({0, 1}, N);
  const auto dU = U.derivative();
  const auto Un = U.truncated(N);
  const auto p = detail::poly_series({2 - m, m - 1, 1}, N);
  const auto residual = x * detail::poly_series({1, -1}, N) * dU - Un * p - detail::poly_series({0, 0, m}, N);
  return detail::verdict(residual);
}

inline OdeCheckResult ode_series_check_e(long m, int N) {
  detail::require_order(N);
  if (m < 0) throw std::invalid_argument("ode_series_check_e: m must be >= 0");
  return ode_series_check_e(detail::generating_series(mirror_e(), BigRat(m), N + 1), BigRat(m));
}

inline OdeCheckResult ode_series_check_pi(const PowerSeries<BigRat>& V, const BigRat& m) {
  const int N = V.order() - 1;
  const auto x = detail::poly_series({0, 1}, N);
  const auto dV = V.derivative();
  const auto Vn = V.truncated(N);
  const auto p = detail::poly_series({m - 2, -1, -m}, N);
  const auto residual = x * detail::poly_series({1, 0, -1}, N) * dV + Vn * p - detail::poly_series({0, 0, m}, N);
  return detail::verdict(residual);
}

inline OdeCheckResult ode_series_check_pi(long m, int N) {
  detail::require_order(N);
  if (m < 0) throw std::invalid_argument("ode_series_check_pi: m must be >= 0");
  return ode_series_check_pi(detail::generating_series(mirror_pi(), BigRat(m), N + 1), BigRat(m));
}

inline OdeCheckResult ode_series_check_gamma(const PowerSeries<BigRat>& W, const BigRat& z) {
  const int N = W.order() - 1;
  const auto x = detail::poly_series({0, 1}, N);
  const auto dW = W.derivative();
  const auto Wn = W.truncated(N);
  const auto residual =
      x * detail::poly_series({1, -1}, N) * dW + Wn * detail::poly_series({z - 1, -1}, N) - detail::poly_series({0, z}, N);
  return detail::verdict(residual);
}

/// W(x) = sum_{n>=1} w_n x^n with w_1 = 1, w_{n+1} = (n+1)/(n+z) w_n.
inline OdeCheckResult ode_series_check_gamma(const BigRat& z, int N) {
  detail::require_order(N);
  return ode_series_check_gamma(detail::generating_series(gamma_triangle_recurrence(), z, N + 1), z);
}

struct CertificateEntry {
  std::string name;
  long m;
  double deviation;
  double tolerance;

  bool pass() const { return deviation <= tolerance; }
};

struct CertificateReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  double max_deviation = 0;
  std::vector<CertificateEntry> details;

  void add(std::string name, long m, double deviation, double tolerance) {
    details.push_back({std::move(name), m, deviation, tolerance});
    // NaN never passes
    if (!(deviation <= tolerance)) pass = false;
    if (!(deviation <= max_deviation)) max_deviation = deviation;
  }
};

inline constexpr double kChainTolerance = 1e-9;

/// For m <= m_max: J_m = I_{m+1}, J_{m+1} = e - (m+2) J_m, I_{m+1} = e - (m+1) I_m,
/// f(m+2) = (m+2)[f(m) - f(m+1)] with f = J/e, and e f_eval(m) = J_m.
inline CertificateReport identity_chain_e(int m_max) {
  if (m_max < 2) throw std::invalid_argument("identity_chain_e: m_max must be >= 2");
  CertificateReport report;
  report.check = "identity_chain_e";
  report.params = {{"m_max", std::to_string(m_max)}};
  const double e = e_v<double>();
  std::vector<double> J, I;
  for (int m = 0; m <= m_max + 1; ++m) {
    J.push_back(quad_J<double>(m).value);
    I.push_back(quad_I<double>(m).value);
  }
  I.push_back(quad_I<double>(m_max + 2).value);
  for (int m = 0; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    report.add("J=I", m, std::abs(J[k] - I[k + 1]), kChainTolerance);
    report.add("I-rec", m, std::abs(I[k + 1] - (e - (m + 1) * I[k])), kChainTolerance);
    report.add("J-rec", m, std::abs(J[k + 1] - (e - (m + 2) * J[k])), kChainTolerance);
    report.add("f=J/e", m, std::abs(f_eval(Complex<double>(m)).re * e - J[k]), kChainTolerance);
    if (m + 2 <= m_max + 1) {
      const double f0 = J[k] / e, f1 = J[k + 1] / e, f2 = J[k + 2] / e;
      report.add("f-discrete", m, std::abs(f2 - (m + 2) * (f0 - f1)), kChainTolerance);
    }
  }
  return report;
}

/// For m <= m_max: L_{m+2} = L_m - L_{m+1}/(m+1) and sqrt(2/pi) L_m = g_eval(m).
inline CertificateReport identity_chain_pi(int m_max) {
  if (m_max < 2) throw std::invalid_argument("identity_chain_pi: m_max must be >= 2");
  CertificateReport report;
  report.check = "identity_chain_pi";
  report.params = {{"m_max", std::to_string(m_max)}};
  const double scale = std::sqrt(2 / pi_v<double>());
  std::vector<double> L;
  for (int m = 0; m <= m_max + 2; ++m) L.push_back(quad_L<double>(m).value);
  for (int m = 0; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    report.add("L-rec", m, std::abs(L[k + 2] - (L[k] - L[k + 1] / (m + 1))), kChainTolerance);
    report.add("g=cL", m, std::abs(scale * L[k] - g_eval(Complex<double>(m)).re), kChainTolerance);
  }
  return report;
}

enum class World { E, Pi };

/// |u_n(m) / (f(m) n) - 1| (E) or |v_n(m) / (g(m) sqrt n) - 1| (Pi).
inline double transfer_check(World world, long m, long n) {
  if (n < 1000) throw std::invalid_argument("transfer_check: n must be >= 1000");
  if (m < 0) throw std::invalid_argument("transfer_check: m must be >= 0");
  long double u = 0;
  const PRecurrence rec = world == World::E ? mirror_e() : mirror_pi();
  iterate_sequence(rec, static_cast<long double>(m), n, [&](long k, const long double& v) {
    if (k == n) u = v;
  });
  const double value = static_cast<double>(u);
  const auto z = Complex<double>(static_cast<double>(m));
  const double nd = static_cast<double>(n);
  if (world == World::E) return std::abs(value / (f_eval(z).re * nd) - 1);
  return std::abs(value / (g_eval(z).re * std::sqrt(nd)) - 1);
}

}  // namespace agf
