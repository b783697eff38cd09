#pragma once

// Truncated power series c_0 + c_1 x + ... + c_N x^N.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "agf/exact.hpp"

namespace agf {

template <class T = BigRat>
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : c_(static_cast<std::size_t>(check(order)) + 1, T(0)) {}
  PowerSeries(std::vector<T> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check(order)) + 1, T(0));
  }

  /// Sum_{k<=order} (-1)^k x^k / k!, i.e. exp(-x) truncated.
  static PowerSeries exp_neg(int order) {
    PowerSeries s(order);
    T t(1);
    for (int k = 0; k <= order; ++k) {
      if (k > 0) t = -t / T(k);
      s[k] = t;
    }
    return s;
  }

  /// 1 + a x + a^2 x^2 + ... = 1/(1 - a x).
  static PowerSeries geometric(const T& a, int order) {
    PowerSeries s(order);
    T t(1);
    for (int k = 0; k <= order; ++k, t *= a) s[k] = t;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  T coeff(int k) const { return k < 0 || k > order() ? T(0) : c_[static_cast<std::size_t>(k)]; }

  PowerSeries truncated(int order) const { return PowerSeries(c_, order); }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend PowerSeries operator*(PowerSeries a, const T& s) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  /// Multiplication by x^k (k >= 0), keeping the truncation order.
  PowerSeries times_x_pow(int k) const {
    if (k < 0) throw std::invalid_argument("PowerSeries::times_x_pow: negative power");
    PowerSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = c_[static_cast<std::size_t>(i)];
    return r;
  }

  /// Formal derivative; the result is one order shorter.
  PowerSeries derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) r[k - 1] = c_[static_cast<std::size_t>(k)] * T(k);
    return r;
  }

  /// 1/s for a unit (c_0 != 0).
  PowerSeries inverse() const {
    if (c_[0] == 0) throw std::domain_error("PowerSeries::inverse: constant term is zero");
    PowerSeries r(order());
    r[0] = T(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
      T acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * r[k - j];
      r[k] = -acc / c_[0];
    }
    return r;
  }

  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

  /// Index of the first nonzero coefficient, or -1 when all vanish.
  int first_nonzero() const {
    for (int k = 0; k <= order(); ++k)
      if (c_[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
    return order;
  }

  std::vector<T> c_;
};

}  // namespace agf
