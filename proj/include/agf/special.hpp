#pragma once

// Gamma, log-Gamma, lower incomplete gamma and 1F1 for complex arguments at
// the precision of the Real template parameter.
//
// Gamma: Lanczos (g = 7, 9 terms) for double; Stirling with exact Bernoulli
// corrections and argument raising for anything wider. Reflection covers
// Re z < 1/2 in both cases.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"

namespace agf {

/// The extended-precision real used when more than double precision is asked for.
using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

struct PrecisionConfig {
  int working_digits = 15;
  int series_truncation_bound = 100000;
  double tolerance_abs = std::numeric_limits<double>::epsilon();
  double tolerance_rel = 64 * std::numeric_limits<double>::epsilon();

  template <class Real>
  static PrecisionConfig for_type() {
    const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
    PrecisionConfig cfg;
    cfg.working_digits = std::numeric_limits<Real>::digits10;
    cfg.tolerance_abs = eps;
    cfg.tolerance_rel = 64 * eps;
    return cfg;
  }
};

template <class Real>
bool is_nonpositive_integer(const Complex<Real>& z) {
  using std::floor;
  return z.im == 0 && z.re <= 0 && z.re == floor(z.re);
}

template <class Real>
bool is_integer(const Complex<Real>& z) {
  using std::floor;
  return z.im == 0 && z.re == floor(z.re);
}

namespace detail {

template <class Real>
Complex<Real> log_gamma_lanczos(Complex<Real> z) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7;
  z -= Complex<Real>(1);
  Complex<Real> x(static_cast<Real>(c[0]));
  for (int i = 1; i < 9; ++i) x += Complex<Real>(static_cast<Real>(c[static_cast<std::size_t>(i)])) / (z + Complex<Real>(i));
  Complex<Real> t = z + Complex<Real>(static_cast<Real>(g + 0.5));
  using std::log;
  const Real half_log_2pi = log(2 * pi_v<Real>()) / 2;
  return Complex<Real>(half_log_2pi) + (z + Complex<Real>(Real(0.5))) * principal_log(t) - t + principal_log(x);
}

/// B_{2k} / (2k (2k-1)) for k = 1..count, converted to Real once per type.
template <class Real>
const std::vector<Real>& stirling_coefficients() {
  static const std::vector<Real> coeffs = [] {
    constexpr int count = 60;
    std::vector<BigRat> b = bernoulli_numbers(2 * count);
    std::vector<Real> out;
    out.reserve(count);
    for (int k = 1; k <= count; ++k) {
      out.push_back(to_real<Real>(b[static_cast<std::size_t>(2 * k)] / BigRat((2 * k) * (2 * k - 1))));
    }
    return out;
  }();
  return coeffs;
}

template <class Real>
Complex<Real> log_gamma_stirling(Complex<Real> z) {
  using std::log;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real threshold = Real(std::max(10, std::numeric_limits<Real>::digits10));
  // log Gamma(z) = log Gamma(z + N) - sum_{k<N} log(z + k)
  Complex<Real> shift_sum(0);
  while (z.re < threshold) {
    shift_sum += principal_log(z);
    z += Complex<Real>(1);
  }
  const Real half_log_2pi = log(2 * pi_v<Real>()) / 2;
  Complex<Real> result = (z - Complex<Real>(Real(0.5))) * principal_log(z) - z + Complex<Real>(half_log_2pi);
  const Complex<Real> inv = Complex<Real>(1) / z;
  const Complex<Real> inv2 = inv * inv;
  Complex<Real> power = inv;
  for (const Real& c : stirling_coefficients<Real>()) {
    Complex<Real> term = power * c;
    result += term;
    if (abs(term) <= eps * abs(result)) break;
    power *= inv2;
  }
  return result - shift_sum;
}

template <class Real>
Complex<Real> log_gamma_right(const Complex<Real>& z) {
  if constexpr (std::numeric_limits<Real>::digits <= 53) {
    return log_gamma_lanczos(z);
  } else {
    return log_gamma_stirling(z);
  }
}

inline std::string pole_message(const char* fn) {
  return std::string(fn) + ": pole at a nonpositive integer {0,-1,-2,...}";
}

}  // namespace detail

/// A logarithm of Gamma(z); exp(log_gamma(z)) == gamma(z). Not the
/// principal branch of log(Gamma(z)) in the reflected half-plane.
template <class Real>
Complex<Real> log_gamma(const Complex<Real>& z) {
  if (is_nonpositive_integer(z)) throw pole_error(detail::pole_message("log_gamma"));
  if (z.re < Real(0.5)) {
    using std::log;
    return Complex<Real>(log(pi_v<Real>())) - principal_log(sinpi(z)) -
           detail::log_gamma_right(Complex<Real>(1) - z);
  }
  return detail::log_gamma_right(z);
}

template <class Real>
Complex<Real> gamma(const Complex<Real>& z) {
  if (is_nonpositive_integer(z)) throw pole_error(detail::pole_message("gamma"));
  if (z.re < Real(0.5)) {
    return Complex<Real>(pi_v<Real>()) / (sinpi(z) * exp(detail::log_gamma_right(Complex<Real>(1) - z)));
  }
  return exp(detail::log_gamma_right(z));
}

/// 1/Gamma(z), exactly zero at the poles of Gamma.
template <class Real>
Complex<Real> rgamma(const Complex<Real>& z) {
  if (is_nonpositive_integer(z)) return Complex<Real>(0);
  return Complex<Real>(1) / gamma(z);
}

namespace detail {

/// Sums terms from `next_term(k)` until three consecutive terms fall below
/// tol * |partial sum|.
template <class Real, class TermFn>
Complex<Real> sum_until_small(TermFn&& next_term, const PrecisionConfig& cfg, const char* what) {
  Complex<Real> sum(0);
  int small_run = 0;
  const Real tol = static_cast<Real>(cfg.tolerance_abs);
  for (long k = 0; k < cfg.series_truncation_bound; ++k) {
    Complex<Real> term = next_term(k);
    sum += term;
    if (abs(term) <= tol * abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw non_convergence(std::string(what) + ": series did not converge within the truncation bound");
}

}  // namespace detail

/// gamma(a, x) = sum_{k>=0} (-1)^k x^{a+k} / (k! (a+k)), principal powers.
template <class Real>
Complex<Real> lower_incomplete_gamma(const Complex<Real>& a, const Real& x,
                                     const PrecisionConfig& cfg = PrecisionConfig::for_type<Real>()) {
  if (is_nonpositive_integer(a)) {
    throw pole_error("lower_incomplete_gamma: pole at a in {0,-1,-2,...}");
  }
  if (x == 0) {
    if (a.re > 0) return Complex<Real>(0);
    throw domain_error("lower_incomplete_gamma: x = 0 requires Re a > 0");
  }
  const Complex<Real> prefactor = principal_pow(Complex<Real>(x), a);
  Real power_over_factorial = 1;  // (-x)^k / k!
  auto term = [&](long k) {
    if (k > 0) power_over_factorial *= -x / Real(k);
    return Complex<Real>(power_over_factorial) / (a + Complex<Real>(Real(k)));
  };
  return prefactor * detail::sum_until_small<Real>(term, cfg, "lower_incomplete_gamma");
}

/// Kummer's confluent hypergeometric function 1F1(a; b; x).
template <class Real>
Complex<Real> hyp1f1(const Complex<Real>& a, const Complex<Real>& b, const Complex<Real>& x,
                     const PrecisionConfig& cfg = PrecisionConfig::for_type<Real>()) {
  if (is_nonpositive_integer(b)) throw pole_error("hyp1f1: b is a nonpositive integer");
  Complex<Real> t(1);
  auto term = [&](long k) {
    if (k > 0) {
      const Complex<Real> km1(Real(k - 1));
      t = t * (a + km1) / (b + km1) * x / Real(k);
    }
    return t;
  };
  return detail::sum_until_small<Real>(term, cfg, "hyp1f1");
}

}  // namespace agf
