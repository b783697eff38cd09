#pragma once

// P-recursive sequences in (n, z): sum_{k=0}^{r} c_k(n, z) u_{n+k} = 0,
// iterated forward from r initial values.

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"
#include "agf/parse.hpp"
#include "agf/polynomial.hpp"
#include "agf/special.hpp"

namespace agf {

class PRecurrence {
 public:
  /// coeffs[k] multiplies u_{n+k}; initial_values are u_{n0}..u_{n0+r-1}.
  PRecurrence(std::vector<RationalFn> coeffs, long initial_index, std::vector<BigRat> initial_values)
      : coeffs_(std::move(coeffs)), initial_index_(initial_index), initial_values_(std::move(initial_values)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("PRecurrence: order must be at least 1");
    if (coeffs_.front().is_zero() || coeffs_.back().is_zero()) {
      throw std::invalid_argument("PRecurrence: leading and trailing coefficients must be nonzero");
    }
    if (initial_values_.size() != coeffs_.size() - 1) {
      throw std::invalid_argument("PRecurrence: need exactly `order` initial values");
    }
    for (const auto& c : coeffs_)
      if (c.max_degree() > kMaxDegree) throw std::invalid_argument("PRecurrence: coefficient degree above limit");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFn>& coefficients() const { return coeffs_; }
  long initial_index() const { return initial_index_; }
  const std::vector<BigRat>& initial_values() const { return initial_values_; }

 private:
  std::vector<RationalFn> coeffs_;
  long initial_index_;
  std::vector<BigRat> initial_values_;
};

template <class S>
struct SequencePoint {
  long n;
  S value;
};

namespace detail {

template <class S>
struct widened {
  using type = S;
};
template <>
struct widened<double> {
  using type = long double;
};
template <>
struct widened<Complex<double>> {
  using type = Complex<long double>;
};

template <class To, class From>
To narrow(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else {
    return To(x);
  }
}

}  // namespace detail

/// Forward iteration calling visit(n, u_n) for n = n0..n_max. S is BigRat
/// (exact), a real type, or Complex<Real>. Throws coefficient_pole when a
/// coefficient denominator or the leading coefficient vanishes.
template <class S, class Visitor>
void iterate_sequence(const PRecurrence& rec, const S& z, long n_max, Visitor&& visit) {
  const int r = rec.order();
  const long n0 = rec.initial_index();
  if (n_max < n0 + r - 1) throw std::invalid_argument("iterate_sequence: n_max below the initial window");

  std::vector<CompiledRationalFn<S>> coeffs;
  for (const auto& c : rec.coefficients()) coeffs.emplace_back(c);

  std::vector<S> window;
  for (int k = 0; k < r; ++k) {
    window.push_back(scalar_traits<S>::from_rational(rec.initial_values()[static_cast<std::size_t>(k)]));
    visit(n0 + k, window.back());
  }
  std::vector<S> c(static_cast<std::size_t>(r) + 1);
  for (long n = n0; n + r <= n_max; ++n) {
    const S n_value = scalar_traits<S>::from_rational(BigRat(n));
    for (int k = 0; k <= r; ++k) {
      if (!coeffs[static_cast<std::size_t>(k)].evaluate(n_value, z, c[static_cast<std::size_t>(k)])) {
        throw coefficient_pole(n, k);
      }
    }
    if (scalar_traits<S>::is_zero(c[static_cast<std::size_t>(r)])) throw coefficient_pole(n, r);
    S acc = scalar_traits<S>::from_rational(BigRat(0));
    for (int k = 0; k < r; ++k) acc = acc + c[static_cast<std::size_t>(k)] * window[static_cast<std::size_t>(k)];
    S next = -(acc / c[static_cast<std::size_t>(r)]);
    for (int k = 0; k + 1 < r; ++k) window[static_cast<std::size_t>(k)] = std::move(window[static_cast<std::size_t>(k) + 1]);
    window[static_cast<std::size_t>(r) - 1] = std::move(next);
    visit(n + r, window.back());
  }
}

/// u_{n0}..u_{n_max}. Floating iterations past 10^4 steps run in long double.
template <class S>
std::vector<SequencePoint<S>> eval_sequence(const PRecurrence& rec, const S& z, long n_max) {
  using W = typename detail::widened<S>::type;
  std::vector<SequencePoint<S>> out;
  if (n_max >= rec.initial_index()) out.reserve(static_cast<std::size_t>(n_max - rec.initial_index() + 1));
  if constexpr (!std::is_same_v<W, S>) {
    if (n_max > 10000) {
      iterate_sequence(rec, W(z), n_max, [&](long n, const W& v) { out.push_back({n, detail::narrow<S>(v)}); });
      return out;
    }
  }
  iterate_sequence(rec, z, n_max, [&](long n, const S& v) { out.push_back({n, v}); });
  return out;
}

/// u_{n+2} = u_{n+1} + u_n/(n+z), u_1 = 0, u_2 = 1. The parameter z (or m)
/// is bound at evaluation time.
inline PRecurrence mirror_e() {
  const RationalFn one = RationalFn::constant(1);
  const RationalFn n_plus_z(Poly2::n() + Poly2::z());
  return PRecurrence({-(one / n_plus_z), -one, one}, 1, {0, 1});
}

/// v_{n+2} = v_{n+1}/(n+z) + v_n, v_1 = 0, v_2 = 1.
inline PRecurrence mirror_pi() {
  const RationalFn one = RationalFn::constant(1);
  const RationalFn n_plus_z(Poly2::n() + Poly2::z());
  return PRecurrence({-one, -(one / n_plus_z), one}, 1, {0, 1});
}

/// w_{n+1} = (n+1)/(n+z) w_n started at w_0 = 1, so w_n = n!/(z)_n and
/// w_n ~ Gamma(z) n^{1-z}. The step n = 0 divides by z.
inline PRecurrence gamma_recurrence() {
  const RationalFn one = RationalFn::constant(1);
  const RationalFn ratio(Poly2::n() + Poly2::constant(1), Poly2::n() + Poly2::z());
  return PRecurrence({-ratio, one}, 0, {1});
}

/// The same recurrence started at w_1 = 1: w_n = z n!/(z)_n, the coefficients
/// of z (2F1(1,1;z;x) - 1). Defined at z = 0.
inline PRecurrence gamma_triangle_recurrence() {
  const RationalFn one = RationalFn::constant(1);
  const RationalFn ratio(Poly2::n() + Poly2::constant(1), Poly2::n() + Poly2::z());
  return PRecurrence({-ratio, one}, 1, {1});
}

/// Multiplies every coefficient by the product of the distinct denominators,
/// giving the polynomial (standard P-recursive) form.
inline std::vector<Poly2> clear_denominators(const PRecurrence& rec) {
  std::vector<Poly2> distinct;
  for (const auto& c : rec.coefficients()) {
    if (c.is_polynomial()) continue;
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == c.denominator();
    if (!seen) distinct.push_back(c.denominator());
  }
  std::vector<Poly2> out;
  for (const auto& c : rec.coefficients()) {
    Poly2 p = c.numerator();
    bool skipped = c.is_polynomial();
    for (const auto& d : distinct) {
      if (!skipped && d == c.denominator()) {
        skipped = true;
        continue;
      }
      p = p * d;
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// w_n(z) = n!/(z)_n for n = 0..n_max by iterating gamma_recurrence().
template <class Real>
std::vector<SequencePoint<Complex<Real>>> shell_w(const Complex<Real>& z, long n_max) {
  return eval_sequence(gamma_recurrence(), z, n_max);
}

/// n!/Gamma(n+1-z), asymptotic to n^z.
template <class Real>
Complex<Real> shell_wtilde(const Complex<Real>& z, long n) {
  const Complex<Real> shifted = Complex<Real>(Real(n + 1)) - z;
  if (is_nonpositive_integer(shifted)) throw pole_error("shell_wtilde: n+1-z is a pole of Gamma");
  return exp(log_gamma(Complex<Real>(Real(n + 1))) - log_gamma(shifted));
}

/// Text format, one item per line ('#' starts a comment):
///   coeff2: n+z
///   coeff1: -(n+z)
///   coeff0: -1
///   init: n0=1; 0, 1
inline PRecurrence parse_recurrence(const std::string& content) {
  std::map<int, RationalFn> coeffs;
  std::optional<long> n0;
  std::vector<BigRat> init;
  int init_line = 0;
  for (const auto& kv : read_key_value_lines(content)) {
    if (kv.key.rfind("coeff", 0) == 0) {
      int k = -1;
      try {
        std::size_t used = 0;
        k = std::stoi(kv.key.substr(5), &used);
        if (used != kv.key.size() - 5) k = -1;
      } catch (const std::exception&) {
      }
      if (k < 0) throw parse_error("bad coefficient key '" + kv.key + "'", kv.line, 1);
      if (coeffs.count(k)) throw parse_error("duplicate " + kv.key, kv.line, 1);
      coeffs[k] = parse_rational_expression(kv.value, true, kv.line, kv.value_column);
    } else if (kv.key == "init") {
      init_line = kv.line;
      auto semi = kv.value.find(';');
      std::string head = kv.value.substr(0, semi);
      auto eq = head.find('=');
      if (semi == std::string::npos || eq == std::string::npos || head.substr(0, eq).find("n0") == std::string::npos) {
        throw parse_error("expected 'init: n0=<int>; v0, v1, ...'", kv.line, kv.value_column + 1);
      }
      try {
        n0 = std::stol(head.substr(eq + 1));
      } catch (const std::exception&) {
        throw parse_error("bad n0", kv.line, kv.value_column + static_cast<int>(eq) + 2);
      }
      std::string rest = kv.value.substr(semi + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const int col = kv.value_column + static_cast<int>(semi + 1 + start);
        RationalFn v = parse_rational_expression(item, false, kv.line, col);
        if (!v.is_polynomial() || v.numerator().degree_z() > 0) throw parse_error("initial value must be a constant", kv.line, col + 1);
        init.push_back(v.numerator().constant_term());
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      throw parse_error("unknown key '" + kv.key + "'", kv.line, 1);
    }
  }
  if (coeffs.empty()) throw parse_error("no coefficients given", 1, 1);
  if (!n0) throw parse_error("missing 'init' line", 1, 1);
  const int r = coeffs.rbegin()->first;
  std::vector<RationalFn> list(static_cast<std::size_t>(r) + 1);
  for (auto& [k, c] : coeffs) list[static_cast<std::size_t>(k)] = c;
  if (static_cast<int>(init.size()) != r) {
    throw parse_error("expected " + std::to_string(r) + " initial values", init_line, 1);
  }
  try {
    return PRecurrence(std::move(list), *n0, std::move(init));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 1, 1);
  }
}

inline PRecurrence load_recurrence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open recurrence file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_recurrence(buf.str());
}

}  // namespace agf
