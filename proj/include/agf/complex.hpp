#pragma once

// Minimal complex type usable with any real scalar (double, long double,
// boost::multiprecision floats). std::complex is only specified for the
// builtin floating types.

#include <boost/math/special_functions/fpclassify.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "agf/errors.hpp"
#include "agf/exact.hpp"

namespace agf {

template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  template <class Other>
  explicit Complex(const Complex<Other>& o) : re(static_cast<Real>(o.re)), im(static_cast<Real>(o.im)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    // Smith's algorithm
    using std::abs;
    if (o.im == 0) {
      re /= o.re;
      im /= o.re;
    } else if (abs(o.re) >= abs(o.im)) {
      Real ratio = o.im / o.re;
      Real den = o.re + o.im * ratio;
      Real r = (re + im * ratio) / den;
      im = (im - re * ratio) / den;
      re = std::move(r);
    } else {
      Real ratio = o.re / o.im;
      Real den = o.re * ratio + o.im;
      Real r = (re * ratio + im) / den;
      im = (im * ratio - re) / den;
      re = std::move(r);
    }
    return *this;
  }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) {
    a.re *= s;
    a.im *= s;
    return a;
  }
  friend Complex operator*(const Real& s, Complex a) { return a * s; }
  friend Complex operator/(Complex a, const Real& s) {
    a.re /= s;
    a.im /= s;
    return a;
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

template <class Real>
Real real(const Complex<Real>& z) {
  return z.re;
}
template <class Real>
Real imag(const Complex<Real>& z) {
  return z.im;
}
template <class Real>
Complex<Real> conj(const Complex<Real>& z) {
  return {z.re, -z.im};
}

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::abs;
  using std::sqrt;
  Real a = abs(z.re), b = abs(z.im);
  if (a < b) std::swap(a, b);
  if (a == 0) return a;
  Real t = b / a;
  return a * sqrt(1 + t * t);
}

template <class Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  if (z.im == 0 && z.re < 0) return pi_v<Real>();  // keep -0.0 off the cut
  return atan2(z.im, z.re);
}

template <class Real>
bool is_finite(const Complex<Real>& z) {
  using boost::math::isfinite;
  return isfinite(z.re) && isfinite(z.im);
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  Real m = exp(z.re);
  if (z.im == 0) return {m, Real(0)};
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm, Im in (-pi, pi].
template <class Real>
Complex<Real> principal_log(const Complex<Real>& z) {
  using std::log;
  if (z.re == 0 && z.im == 0) throw domain_error("principal_log: log(0)");
  return {log(abs(z)), arg(z)};
}

/// exp(w * log z) on the principal branch; 0^w = 0 for positive integer w.
template <class Real>
Complex<Real> principal_pow(const Complex<Real>& z, const Complex<Real>& w) {
  using std::floor;
  if (z.re == 0 && z.im == 0) {
    if (w.im == 0 && w.re > 0 && w.re == floor(w.re)) return Complex<Real>(0);
    throw domain_error("principal_pow: zero base with non positive-integer exponent");
  }
  return exp(w * principal_log(z));
}

template <class Real>
Complex<Real> sqrt(const Complex<Real>& z) {
  using std::abs;
  using std::sqrt;
  if (z.re == 0 && z.im == 0) return z;
  Real m = abs(z);
  Real t = sqrt((m + abs(z.re)) / 2);
  if (z.re >= 0) return {t, z.im / (2 * t)};
  Real s = z.im < 0 ? -t : t;
  return {abs(z.im) / (2 * t), s};
}

template <class Real>
Complex<Real> sin(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class Real>
Complex<Real> cos(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

/// sin(pi z) with the real part reduced mod 2 first, so values near the
/// integers keep full relative accuracy.
template <class Real>
Complex<Real> sinpi(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::round;
  using std::sin;
  using std::sinh;
  Real x = z.re - 2 * round(z.re / 2);  // x in [-1, 1]
  const Real p = pi_v<Real>();
  Real sx, cx;
  // sin(pi x) near x = +-1 via sin(pi (1 - |x|)).
  if (x > Real(0.5)) {
    sx = sin(p * (1 - x));
    cx = -cos(p * (1 - x));
  } else if (x < Real(-0.5)) {
    sx = -sin(p * (1 + x));
    cx = -cos(p * (1 + x));
  } else {
    sx = sin(p * x);
    cx = cos(p * x);
  }
  if (x == 0) sx = 0;
  return {sx * cosh(p * z.im), cx * sinh(p * z.im)};
}

/// "a+bi" / "a-bi" with `digits` significant digits.
template <class Real>
std::string to_string(const Complex<Real>& z, int digits = std::numeric_limits<Real>::digits10) {
  std::ostringstream os;
  os << std::setprecision(digits) << z.re;
  Real im = z.im;
  if (im < 0 || (im == 0 && std::signbit(static_cast<double>(im)))) {
    os << '-';
    im = -im;
  } else {
    os << '+';
  }
  os << std::setprecision(digits) << im << 'i';
  return os.str();
}

template <class Real>
std::string real_to_string(const Real& x, int digits = std::numeric_limits<Real>::digits10) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace agf
