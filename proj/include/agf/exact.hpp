#pragma once

// Exact integer/rational arithmetic and the integer sequences behind the
// linear forms a_m - e*b_m and p_m - pi*q_m.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "agf/errors.hpp"

namespace agf {

using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator; zero is 0/1.
using BigRat = boost::multiprecision::cpp_rational;

template <class Real>
Real to_real(const BigInt& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return x.template convert_to<Real>();
  } else {
    return Real(x);
  }
}

template <class Real>
Real to_real(const BigRat& q) {
  return to_real<Real>(boost::multiprecision::numerator(q)) /
         to_real<Real>(boost::multiprecision::denominator(q));
}

template <class Real>
Real pi_v() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real e_v() {
  return boost::math::constants::e<Real>();
}

/// "num/den", always with an explicit denominator.
inline std::string to_fraction_string(const BigRat& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Parses "a", "-a" or "a/b" with integer a, b.
inline BigRat parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return BigRat(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
}

namespace detail {
inline void require_nonnegative(long m, const char* what) {
  if (m < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}
}  // namespace detail

inline BigInt factorial(long m) {
  detail::require_nonnegative(m, "factorial");
  BigInt r = 1;
  for (long i = 2; i <= m; ++i) r *= i;
  return r;
}

/// m(m-2)(m-4)..., with 0!! = (-1)!! = 1.
inline BigInt double_factorial(long m) {
  if (m < -1) throw std::invalid_argument("double_factorial: index below -1");
  BigInt r = 1;
  for (long i = m; i > 1; i -= 2) r *= i;
  return r;
}

/// Number of fixed-point-free permutations of m elements.
inline BigInt derangement(long m) {
  detail::require_nonnegative(m, "derangement");
  if (m == 0) return 1;
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  for (long k = 2; k <= m; ++k) {
    BigInt next = (k - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

template <class T>
T pochhammer(const T& x, long k) {
  detail::require_nonnegative(k, "pochhammer");
  T r(1);
  for (long j = 0; j < k; ++j) r *= x + T(j);
  return r;
}

/// K_m = a - e*b.
struct LinearFormE {
  BigInt a;
  BigInt b;

  template <class Real>
  Real value() const {
    return to_real<Real>(a) - e_v<Real>() * to_real<Real>(b);
  }
  template <class Real>
  Real magnitude() const {
    return to_real<Real>(a) + e_v<Real>() * to_real<Real>(b);
  }
  friend bool operator==(const LinearFormE&, const LinearFormE&) = default;
};

/// K_m = p - pi*q.
struct LinearFormPi {
  BigRat p;
  BigRat q;

  template <class Real>
  Real value() const {
    return to_real<Real>(p) - pi_v<Real>() * to_real<Real>(q);
  }
  template <class Real>
  Real magnitude() const {
    return to_real<Real>(p) + pi_v<Real>() * to_real<Real>(q);
  }
  friend bool operator==(const LinearFormPi&, const LinearFormPi&) = default;
};

/// (a_m, b_m) for m = 0..m_max from a_{m+1} = (m+2)a_m, b_{m+1} = (m+2)b_m + (-1)^m.
inline std::vector<LinearFormE> duality_forms_e_by_recurrence(long m_max) {
  detail::require_nonnegative(m_max, "duality_forms_e");
  std::vector<LinearFormE> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  out.push_back({1, 0});
  for (long m = 0; m < m_max; ++m) {
    const auto& cur = out.back();
    BigInt a = (m + 2) * cur.a;
    BigInt b = (m + 2) * cur.b + (m % 2 == 0 ? 1 : -1);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

/// Cross-checks the recurrence against a_m = (m+1)!, b_m = D_{m+1}.
inline LinearFormE duality_form_e(long m) {
  detail::require_nonnegative(m, "duality_form_e");
  LinearFormE rec = duality_forms_e_by_recurrence(m).back();
  LinearFormE closed{factorial(m + 1), derangement(m + 1)};
  if (!(rec == closed)) {
    throw consistency_error("duality_form_e: recurrence and closed form differ at m=" +
                            std::to_string(m));
  }
  return closed;
}

/// (p_m, q_m) from p_{m+2} = p_m + p_{m+1}/(m+1) (same for q), p_0=1, p_1=1, q_0=0, q_1=1/2.
inline std::vector<LinearFormPi> duality_forms_pi_by_recurrence(long m_max) {
  detail::require_nonnegative(m_max, "duality_forms_pi");
  std::vector<LinearFormPi> out;
  out.reserve(static_cast<std::size_t>(m_max) + 2);
  out.push_back({1, 0});
  out.push_back({1, BigRat(1, 2)});
  for (long m = 0; m + 2 <= m_max; ++m) {
    const auto& k0 = out[static_cast<std::size_t>(m)];
    const auto& k1 = out[static_cast<std::size_t>(m) + 1];
    BigRat p = k0.p + k1.p / (m + 1);
    BigRat q = k0.q + k1.q / (m + 1);
    out.push_back({std::move(p), std::move(q)});
  }
  out.resize(static_cast<std::size_t>(m_max) + 1);
  return out;
}

/// Double-factorial closed forms; the odd formulas also hold at k = 0.
inline LinearFormPi duality_form_pi_closed(long m) {
  detail::require_nonnegative(m, "duality_form_pi_closed");
  if (m == 0) return {1, 0};
  const long k = m / 2;
  if (m % 2 == 0) {
    return {BigRat(double_factorial(2 * k), double_factorial(2 * k - 1)),
            BigRat(double_factorial(2 * k - 1), 2 * double_factorial(2 * k - 2))};
  }
  return {BigRat(double_factorial(2 * k), double_factorial(2 * k - 1)),
          BigRat(double_factorial(2 * k + 1), 2 * double_factorial(2 * k))};
}

inline LinearFormPi duality_form_pi(long m) {
  detail::require_nonnegative(m, "duality_form_pi");
  LinearFormPi rec = duality_forms_pi_by_recurrence(m).back();
  LinearFormPi closed = duality_form_pi_closed(m);
  if (!(rec == closed)) {
    throw consistency_error("duality_form_pi: recurrence and closed form differ at m=" +
                            std::to_string(m));
  }
  return rec;
}

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2).
inline std::vector<BigRat> bernoulli_numbers(int n) {
  std::vector<BigRat> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    BigRat acc = 0;
    BigInt binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += BigRat(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

}  // namespace agf
