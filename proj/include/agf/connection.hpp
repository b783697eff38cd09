#pragma once

// Asymptotic shells Lambda(n,z) = lambda^n n^{rho(z)} prod Gamma(n + alpha z + beta)^m,
// Richardson extrapolation of u_n / Lambda(n,z), and the integer-slope test
// for Gamma(alpha (z+1) + beta) / Gamma(alpha z + beta).

#include <cmath>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"
#include "agf/polynomial.hpp"
#include "agf/recurrence.hpp"
#include "agf/special.hpp"

namespace agf {

template <class Real>
struct GammaFactor {
  BigRat alpha;
  Complex<Real> beta;
  int multiplicity = 1;
};

/// rho(z) = rho_slope * z + rho_intercept.
template <class Real>
struct AsymptoticShell {
  Complex<Real> lambda{Real(1)};
  int rho_slope = 0;
  Real rho_intercept = 0;
  std::vector<GammaFactor<Real>> gamma_factors;
};

/// Lambda(n,z) = n, the shell of u_n(z).
template <class Real>
AsymptoticShell<Real> f_shell() {
  return {Complex<Real>(Real(1)), 0, Real(1), {}};
}

/// Lambda(n,z) = sqrt(n), the shell of v_n(z).
template <class Real>
AsymptoticShell<Real> g_shell() {
  return {Complex<Real>(Real(1)), 0, Real(0.5), {}};
}

/// Lambda(n,z) = n^{1-z}, the shell of w_n(z) = n!/(z)_n.
template <class Real>
AsymptoticShell<Real> gamma_shell() {
  return {Complex<Real>(Real(1)), -1, Real(1), {}};
}

/// log Lambda(n,z), accumulated term by term so huge shells stay finite.
template <class Real>
Complex<Real> shell_log(const AsymptoticShell<Real>& shell, long n, const Complex<Real>& z) {
  if (shell.lambda == Complex<Real>(0)) throw std::invalid_argument("shell_log: lambda must be nonzero");
  if (n <= 0) throw std::invalid_argument("shell_log: n must be positive");
  using std::log;
  const Real nr = Real(n);
  const Complex<Real> rho = z * Real(shell.rho_slope) + Complex<Real>(shell.rho_intercept);
  Complex<Real> acc = principal_log(shell.lambda) * nr + rho * log(nr);
  for (const auto& g : shell.gamma_factors) {
    const Complex<Real> arg = Complex<Real>(nr) + z * to_real<Real>(g.alpha) + g.beta;
    acc += log_gamma(arg) * Real(g.multiplicity);
  }
  return acc;
}

template <class Real>
Complex<Real> shell_eval(const AsymptoticShell<Real>& shell, long n, const Complex<Real>& z) {
  return exp(shell_log(shell, n, z));
}

struct ExtrapolationConfig {
  int depth = 6;
  long n_base = 1024;
  int n_growth = 2;

  void validate() const {
    if (depth < 1) throw std::invalid_argument("ExtrapolationConfig: depth must be >= 1");
    if (n_base < 16) throw std::invalid_argument("ExtrapolationConfig: n_base must be >= 16");
    if (n_growth < 2) throw std::invalid_argument("ExtrapolationConfig: n_growth must be >= 2");
  }
  long sample_n(int k) const {
    long n = n_base;
    for (int i = 0; i < k; ++i) n *= n_growth;
    return n;
  }
};

template <class Real>
struct ExtrapolationResult {
  Complex<Real> value;
  /// |T_{d,d} - T_{d-1,d-1}|: a heuristic, not a bound.
  Real error_estimate;
  std::vector<Complex<Real>> diagonal;
};

/// Richardson tableau for samples s_k = s(n_base * growth^k) whose error has
/// an expansion in powers of 1/n. Throws non_convergence when the diagonal
/// differences grow three times in a row above the rounding floor.
template <class Real>
ExtrapolationResult<Real> richardson(std::span<const Complex<Real>> samples, int growth) {
  if (samples.size() < 2) throw std::invalid_argument("richardson: need at least two samples");
  std::vector<std::vector<Complex<Real>>> t(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    t[k].push_back(samples[k]);
    Real factor = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      factor *= Real(growth);
      t[k].push_back(t[k][j - 1] + (t[k][j - 1] - t[k - 1][j - 1]) / (factor - 1));
    }
  }
  ExtrapolationResult<Real> out;
  for (std::size_t k = 0; k < t.size(); ++k) out.diagonal.push_back(t[k][k]);
  out.value = out.diagonal.back();
  const auto& d = out.diagonal;
  out.error_estimate = abs(d[d.size() - 1] - d[d.size() - 2]);

  const Real floor = 1024 * std::numeric_limits<Real>::epsilon() * (abs(out.value) + Real(1));
  int growing = 0;
  Real prev_delta = -1;
  for (std::size_t k = 1; k < d.size(); ++k) {
    const Real delta = abs(d[k] - d[k - 1]);
    if (prev_delta >= 0 && delta > floor && delta > prev_delta) {
      if (++growing == 3) throw non_convergence("richardson: extrapolation diagonal diverges");
    } else {
      growing = 0;
    }
    prev_delta = delta;
  }
  return out;
}

/// Samples u_n at n = n_base * growth^k, k = 0..depth, in one forward pass.
template <class Real>
std::vector<Complex<Real>> sample_sequence(const PRecurrence& rec, const Complex<Real>& z,
                                           const ExtrapolationConfig& cfg) {
  cfg.validate();
  std::vector<long> ns;
  for (int k = 0; k <= cfg.depth; ++k) ns.push_back(cfg.sample_n(k));
  std::vector<Complex<Real>> values(ns.size());
  std::size_t next = 0;
  // long samples accumulate in long double when Real is double
  using W = typename detail::widened<Real>::type;
  auto record = [&](long n, const Complex<W>& v) {
    if (next < ns.size() && n == ns[next]) values[next++] = Complex<Real>(v);
  };
  if (z.im == 0) {
    iterate_sequence(rec, W(z.re), ns.back(), [&](long n, const W& v) { record(n, Complex<W>(v)); });
  } else {
    iterate_sequence(rec, Complex<W>(z), ns.back(), record);
  }
  return values;
}

/// h(z) in u_n(z) ~ Lambda(n,z) h(z): Richardson on u_n / Lambda(n,z).
template <class Real>
ExtrapolationResult<Real> estimate_connection_constant(const PRecurrence& rec, const AsymptoticShell<Real>& shell,
                                                       const Complex<Real>& z, const ExtrapolationConfig& cfg = {}) {
  std::vector<Complex<Real>> samples = sample_sequence(rec, z, cfg);
  for (int k = 0; k <= cfg.depth; ++k) {
    samples[static_cast<std::size_t>(k)] =
        samples[static_cast<std::size_t>(k)] * exp(-shell_log(shell, cfg.sample_n(k), z));
  }
  return richardson<Real>(samples, cfg.n_growth);
}

/// lim n/u_n for the e-world mirror recurrence at m = 0 (the limit is e).
template <class Real>
ExtrapolationResult<Real> mirror_limit_e(const ExtrapolationConfig& cfg = {}) {
  std::vector<Complex<Real>> s = sample_sequence(mirror_e(), Complex<Real>(0), cfg);
  for (int k = 0; k <= cfg.depth; ++k) {
    auto& v = s[static_cast<std::size_t>(k)];
    v = Complex<Real>(Real(cfg.sample_n(k))) / v;
  }
  return richardson<Real>(s, cfg.n_growth);
}

/// lim 2n/v_n^2 for the pi-world mirror recurrence at m = 0 (the limit is pi).
template <class Real>
ExtrapolationResult<Real> mirror_limit_pi(const ExtrapolationConfig& cfg = {}) {
  std::vector<Complex<Real>> s = sample_sequence(mirror_pi(), Complex<Real>(0), cfg);
  for (int k = 0; k <= cfg.depth; ++k) {
    auto& v = s[static_cast<std::size_t>(k)];
    v = Complex<Real>(Real(2 * cfg.sample_n(k))) / (v * v);
  }
  return richardson<Real>(s, cfg.n_growth);
}

enum class SlopeKind { Rational, NonRational };

/// Gamma(alpha z + alpha + beta) / Gamma(alpha z + beta). When alpha is an
/// integer k != 0 the ratio is prod_j (alpha z + shift_j), reciprocal for k < 0.
template <class Real>
struct SlopeRatioResult {
  SlopeKind kind = SlopeKind::NonRational;
  BigRat alpha;
  std::vector<Complex<Real>> shifts;
  bool reciprocal = false;

  bool is_rational() const { return kind == SlopeKind::Rational; }

  Complex<Real> evaluate(const Complex<Real>& z) const {
    if (!is_rational()) throw std::logic_error("SlopeRatioResult: no rational form");
    const Real a = to_real<Real>(alpha);
    Complex<Real> p(Real(1));
    for (const auto& s : shifts) p *= z * a + s;
    if (reciprocal) {
      if (p == Complex<Real>(0)) throw pole_error("slope ratio: pole of the rational form");
      return Complex<Real>(Real(1)) / p;
    }
    return p;
  }

  std::string to_string(int digits = 6) const {
    if (!is_rational()) return "non-rational";
    std::ostringstream os;
    if (reciprocal) os << "1/(";
    for (const auto& s : shifts) {
      os << "(" << alpha.str() << "z";
      if (s.im != 0) {
        os << " + (" << agf::to_string(s, digits) << ")";
      } else if (s.re != 0) {
        os << (s.re < 0 ? " - " : " + ") << real_to_string(s.re < 0 ? Real(-s.re) : s.re, digits);
      }
      os << ")";
    }
    if (reciprocal) os << ")";
    return os.str();
  }
};

template <class Real>
SlopeRatioResult<Real> slope_ratio(const BigRat& alpha, const Complex<Real>& beta) {
  if (alpha == 0) throw std::invalid_argument("slope_ratio: alpha must be nonzero");
  SlopeRatioResult<Real> out;
  out.alpha = alpha;
  if (boost::multiprecision::denominator(alpha) != 1) return out;
  out.kind = SlopeKind::Rational;
  const long k = static_cast<long>(boost::multiprecision::numerator(alpha));
  if (k > 0) {
    for (long j = 0; j < k; ++j) out.shifts.push_back(beta + Complex<Real>(Real(j)));
  } else {
    out.reciprocal = true;
    for (long j = 0; j < -k; ++j) out.shifts.push_back(beta + Complex<Real>(Real(k + j)));
  }
  return out;
}

/// Exact rational form when beta is rational; nullopt for non-integer alpha.
inline std::optional<RationalFn> slope_ratio_exact(const BigRat& alpha, const BigRat& beta) {
  if (alpha == 0) throw std::invalid_argument("slope_ratio: alpha must be nonzero");
  if (boost::multiprecision::denominator(alpha) != 1) return std::nullopt;
  const long k = static_cast<long>(boost::multiprecision::numerator(alpha));
  const Poly2 phi = Poly2::z() * alpha + Poly2::constant(beta);
  Poly2 p = Poly2::constant(1);
  if (k > 0) {
    for (long j = 0; j < k; ++j) p = p * (phi + Poly2::constant(j));
    return RationalFn(p);
  }
  for (long j = 0; j < -k; ++j) p = p * (phi + Poly2::constant(k + j));
  return RationalFn(Poly2::constant(1), p);
}

/// max over samples of |Gamma ratio - rational form| / |Gamma ratio|, with the
/// Gamma ratio taken through log_gamma.
template <class Real>
Real slope_ratio_numeric_check(const SlopeRatioResult<Real>& result, const Complex<Real>& beta,
                               std::span<const Complex<Real>> samples) {
  if (!result.is_rational()) throw std::invalid_argument("slope_ratio_numeric_check: result is not rational");
  const Real a = to_real<Real>(result.alpha);
  Real worst = 0;
  for (const auto& z : samples) {
    const Complex<Real> phi = z * a + beta;
    const Complex<Real> ratio = exp(log_gamma(phi + Complex<Real>(a)) - log_gamma(phi));
    const Real dev = abs(ratio - result.evaluate(z)) / abs(ratio);
    if (dev > worst) worst = dev;
  }
  return worst;
}

}  // namespace agf
