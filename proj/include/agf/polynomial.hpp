#pragma once

// Dense bivariate polynomials in (n, z) with exact rational coefficients and
// quotients of them. These carry the coefficients of P-recurrences (in n and
// z) and of additive functional equations (in z only).

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"

namespace agf {

/// Largest degree in either variable accepted by recurrences and AFE specs.
inline constexpr int kMaxDegree = 8;

/// Conversion of exact coefficients to an evaluation scalar.
template <class S>
struct scalar_traits {
  static S from_rational(const BigRat& q) { return to_real<S>(q); }
  static bool is_zero(const S& x) { return x == 0; }
};

template <>
struct scalar_traits<BigRat> {
  static BigRat from_rational(const BigRat& q) { return q; }
  static bool is_zero(const BigRat& x) { return x == 0; }
};

template <class Real>
struct scalar_traits<Complex<Real>> {
  static Complex<Real> from_rational(const BigRat& q) { return Complex<Real>(to_real<Real>(q)); }
  static bool is_zero(const Complex<Real>& x) { return x.re == 0 && x.im == 0; }
};

class Poly2 {
 public:
  Poly2() = default;
  /// coeffs[i][j] multiplies n^i z^j.
  explicit Poly2(std::vector<std::vector<BigRat>> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly2 constant(const BigRat& value) { return Poly2({{value}}); }
  static Poly2 n() { return Poly2({{BigRat(0)}, {BigRat(1)}}); }
  static Poly2 z() { return Poly2({{BigRat(0), BigRat(1)}}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].size() <= 1); }
  BigRat constant_term() const { return coeff(0, 0); }

  int degree_n() const { return static_cast<int>(c_.size()) - 1; }
  int degree_z() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }

  BigRat coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return 0;
    const auto& row = c_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(j)];
  }

  /// Coefficient of z^d viewed as a polynomial in n.
  Poly2 z_coefficient(int d) const {
    std::vector<std::vector<BigRat>> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = {coeff(static_cast<int>(i), d)};
    return Poly2(std::move(out));
  }

  const std::vector<std::vector<BigRat>>& coefficients() const { return c_; }

  Poly2& operator+=(const Poly2& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      auto& row = c_[i];
      if (row.size() < o.c_[i].size()) row.resize(o.c_[i].size());
      for (std::size_t j = 0; j < o.c_[i].size(); ++j) row[j] += o.c_[i][j];
    }
    trim();
    return *this;
  }
  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& row : r.c_)
      for (auto& v : row) v = -v;
    return r;
  }
  Poly2& operator-=(const Poly2& o) { return *this += -o; }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::vector<BigRat>> out(a.c_.size() + b.c_.size() - 1,
                                         std::vector<BigRat>(static_cast<std::size_t>(a.degree_z() + b.degree_z() + 1)));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
        if (a.c_[i][j] == 0) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k)
          for (std::size_t l = 0; l < b.c_[k].size(); ++l) out[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
      }
    return Poly2(std::move(out));
  }
  friend Poly2 operator*(Poly2 a, const BigRat& s) {
    if (s == 0) return {};
    for (auto& row : a.c_)
      for (auto& v : row) v *= s;
    return a;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

  Poly2 pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly2::pow: negative exponent");
    Poly2 r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// p(n + shift_n, z + shift_z).
  Poly2 shifted(const BigRat& shift_n, const BigRat& shift_z) const {
    const Poly2 nn = n() + constant(shift_n);
    const Poly2 zz = z() + constant(shift_z);
    Poly2 out;
    for (int i = 0; i <= degree_n(); ++i)
      for (int j = 0; j <= degree_z(); ++j) {
        BigRat c = coeff(i, j);
        if (c != 0) out += nn.pow(i) * zz.pow(j) * c;
      }
    return out;
  }

  /// Horner evaluation; S is BigRat, a real type, or Complex<Real>.
  template <class S>
  S evaluate(const S& n_value, const S& z_value) const {
    S acc = scalar_traits<S>::from_rational(BigRat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      S inner = scalar_traits<S>::from_rational(BigRat(0));
      for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * z_value + scalar_traits<S>::from_rational(*jt);
      acc = acc * n_value + inner;
    }
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_n(); i >= 0; --i)
      for (int j = degree_z(); j >= 0; --j) {
        BigRat c = coeff(i, j);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        const bool unit = c == 1 && (i > 0 || j > 0);
        if (!unit) os << c.str();
        auto monomial = [&](const char* var, int power, bool need_sep) {
          if (power == 0) return;
          if (need_sep) os << '*';
          os << var;
          if (power > 1) os << '^' << power;
        };
        monomial("n", i, !unit);
        monomial("z", j, !unit || i > 0);
        first = false;
      }
    return os.str();
  }

 private:
  void trim() {
    for (auto& row : c_)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }

  std::vector<std::vector<BigRat>> c_;
};

/// numerator / denominator, denominator not the zero polynomial. No gcd
/// cancellation beyond folding constant denominators into the numerator.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly2::constant(1)) {}
  RationalFn(Poly2 num) : num_(std::move(num)), den_(Poly2::constant(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFn(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    normalize();
  }
  static RationalFn constant(const BigRat& v) { return RationalFn(Poly2::constant(v)); }

  const Poly2& numerator() const { return num_; }
  const Poly2& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  int max_degree() const {
    return std::max({num_.degree_n(), num_.degree_z(), den_.degree_n(), den_.degree_z()});
  }
  bool depends_on_n() const { return num_.degree_n() > 0 || den_.degree_n() > 0; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by the zero function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  /// Structural equality after normalization; equal functions with different
  /// uncancelled factors compare unequal.
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Throws a pole_error when the denominator vanishes at the point.
  template <class S>
  S evaluate(const S& n_value, const S& z_value) const {
    S d = den_.evaluate(n_value, z_value);
    if (scalar_traits<S>::is_zero(d)) throw pole_error("rational coefficient " + to_string() + " has a pole here");
    return num_.evaluate(n_value, z_value) / d;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_constant()) {
      num_ = num_ * (BigRat(1) / den_.constant_term());
      den_ = Poly2::constant(1);
    }
  }

  Poly2 num_;
  Poly2 den_;
};

/// Coefficients pre-converted to the evaluation scalar, for tight loops.
template <class S>
class CompiledRationalFn {
 public:
  explicit CompiledRationalFn(const RationalFn& f) : num_(convert(f.numerator())), den_(convert(f.denominator())) {}

  /// Returns false when the denominator vanishes.
  bool evaluate(const S& n_value, const S& z_value, S& out) const {
    S d = horner(den_, n_value, z_value);
    if (scalar_traits<S>::is_zero(d)) return false;
    out = horner(num_, n_value, z_value) / d;
    return true;
  }

 private:
  using Table = std::vector<std::vector<S>>;

  static Table convert(const Poly2& p) {
    Table t;
    for (const auto& row : p.coefficients()) {
      std::vector<S> r;
      for (const auto& c : row) r.push_back(scalar_traits<S>::from_rational(c));
      t.push_back(std::move(r));
    }
    return t;
  }

  static S horner(const Table& t, const S& n_value, const S& z_value) {
    S acc = scalar_traits<S>::from_rational(BigRat(0));
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      S inner = scalar_traits<S>::from_rational(BigRat(0));
      for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * z_value + *jt;
      acc = acc * n_value + inner;
    }
    return acc;
  }

  Table num_;
  Table den_;
};

}  // namespace agf
