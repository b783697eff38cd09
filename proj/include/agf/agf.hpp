#pragma once

// The order-2 additive Gamma functions
//   f(z) = e^{-1} sum_k 1/(k! (z+2+k)),   f(z+2) = (z+2)[f(z) - f(z+1)],
//   g(z) = sqrt(2)[A(z) - A(z-1)], A(z) = Gamma(z/2+1)/Gamma((z+1)/2),
//                                   g(z+2) = g(z) - g(z+1)/(z+1),
// additive functional equations (AFEs) sum_k R_k(z) h(z+k) = 0 with checks on
// them, and the duality forms tying f(m), g(m) to a_m - e b_m, p_m - pi q_m.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"
#include "agf/parse.hpp"
#include "agf/polynomial.hpp"
#include "agf/special.hpp"

namespace agf {

/// Poles at integers <= max_pole (f: -2, g: -1, Gamma: 0).
struct PoleSet {
  long max_pole;

  template <class Real>
  bool contains(const Complex<Real>& z) const {
    using std::floor;
    return z.im == 0 && z.re <= Real(max_pole) && z.re == floor(z.re);
  }
  template <class Real>
  Real distance(const Complex<Real>& z) const {
    using std::abs;
    using std::round;
    Real nearest = round(z.re);
    if (nearest > Real(max_pole)) nearest = Real(max_pole);
    return agf::abs(z - Complex<Real>(nearest));
  }
};

inline constexpr PoleSet kPolesF{-2};
inline constexpr PoleSet kPolesG{-1};
inline constexpr PoleSet kPolesGamma{0};

template <class Real>
Complex<Real> f_eval(const Complex<Real>& z, const PrecisionConfig& cfg = PrecisionConfig::for_type<Real>()) {
  if (kPolesF.contains(z)) throw pole_error("f: pole at z in {-2,-3,-4,...}");
  const Complex<Real> a = z + Complex<Real>(Real(2));
  Real inv_factorial = 1;
  auto term = [&](long k) {
    if (k > 0) inv_factorial /= Real(k);
    return Complex<Real>(inv_factorial) / (a + Complex<Real>(Real(k)));
  };
  using std::exp;
  return detail::sum_until_small<Real>(term, cfg, "f") * exp(Real(-1));
}

/// e^{-1 - i pi z} gamma(z+2, -1) with the principal power (-1)^{z+2}.
template <class Real>
Complex<Real> f_via_incomplete_gamma(const Complex<Real>& z,
                                     const PrecisionConfig& cfg = PrecisionConfig::for_type<Real>()) {
  if (kPolesF.contains(z)) throw pole_error("f: pole at z in {-2,-3,-4,...}");
  const Complex<Real> phase = exp(Complex<Real>(Real(-1), -pi_v<Real>() * z.re) + Complex<Real>(pi_v<Real>() * z.im));
  return phase * lower_incomplete_gamma(z + Complex<Real>(Real(2)), Real(-1), cfg);
}

/// 1F1(2; z+2; -1) / (z+1). At z = -1 this is 0/0 and the route is undefined.
template <class Real>
Complex<Real> f_via_hyp1f1(const Complex<Real>& z, const PrecisionConfig& cfg = PrecisionConfig::for_type<Real>()) {
  if (kPolesF.contains(z)) throw pole_error("f: pole at z in {-2,-3,-4,...}");
  const Complex<Real> zp1 = z + Complex<Real>(Real(1));
  if (zp1 == Complex<Real>(0)) throw domain_error("f_via_hyp1f1: removable 0/0 at z = -1");
  return hyp1f1(Complex<Real>(Real(2)), z + Complex<Real>(Real(2)), Complex<Real>(Real(-1)), cfg) / zp1;
}

/// A(z) = Gamma(z/2+1) / Gamma((z+1)/2), through log_gamma; zero where the
/// denominator has a pole.
template <class Real>
Complex<Real> gamma_ratio_A(const Complex<Real>& z) {
  const Complex<Real> num = z * Real(0.5) + Complex<Real>(Real(1));
  const Complex<Real> den = (z + Complex<Real>(Real(1))) * Real(0.5);
  if (is_nonpositive_integer(num)) throw pole_error("A: Gamma(z/2+1) has a pole");
  if (is_nonpositive_integer(den)) return Complex<Real>(0);
  return exp(log_gamma(num) - log_gamma(den));
}

template <class Real>
Complex<Real> g_eval(const Complex<Real>& z) {
  if (kPolesG.contains(z)) throw pole_error("g: pole at z in {-1,-2,-3,...}");
  using std::sqrt;
  return (gamma_ratio_A(z) - gamma_ratio_A(z - Complex<Real>(Real(1)))) * sqrt(Real(2));
}

/// An anchor h(point) = value, with the value written as an exact decimal.
struct Anchor {
  BigRat point;
  ComplexLiteral value;
};

/// sum_{k=0}^{r} R_k(z) h(z+k) = 0 together with r anchors at z0, ..., z0+r-1.
class AGFSpec {
 public:
  AGFSpec(std::vector<RationalFn> coeffs, std::vector<Anchor> anchors, std::string name = "custom")
      : coeffs_(std::move(coeffs)), anchors_(std::move(anchors)), name_(std::move(name)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("AGFSpec: order must be at least 1");
    if (coeffs_.front().is_zero() || coeffs_.back().is_zero()) {
      throw std::invalid_argument("AGFSpec: R_0 and R_r must be nonzero");
    }
    for (const auto& c : coeffs_) {
      if (c.depends_on_n()) throw std::invalid_argument("AGFSpec: coefficients must depend on z only");
      if (c.max_degree() > kMaxDegree) throw std::invalid_argument("AGFSpec: coefficient degree above limit");
    }
    if (!anchors_.empty()) {
      if (static_cast<int>(anchors_.size()) != order()) {
        throw std::invalid_argument("AGFSpec: need exactly r anchors");
      }
      for (std::size_t k = 1; k < anchors_.size(); ++k) {
        if (anchors_[k].point != anchors_[0].point + BigRat(static_cast<long>(k))) {
          throw std::invalid_argument("AGFSpec: anchors must sit at z0, z0+1, ..., z0+r-1");
        }
      }
    }
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFn>& coefficients() const { return coeffs_; }
  const std::vector<Anchor>& anchors() const { return anchors_; }
  const std::string& name() const { return name_; }

  template <class S>
  S coefficient(int k, const S& z) const {
    const S zero = scalar_traits<S>::from_rational(BigRat(0));
    return coeffs_.at(static_cast<std::size_t>(k)).evaluate(zero, z);
  }

 private:
  std::vector<RationalFn> coeffs_;
  std::vector<Anchor> anchors_;
  std::string name_;
};

namespace detail {

/// x as an exact decimal with `digits` significant digits.
template <class Real>
BigRat decimal_rational(const Real& x, int digits = 45) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  std::string s = os.str();
  const bool negative = !s.empty() && s[0] == '-';
  std::size_t pos = negative ? 1 : 0;
  auto value = read_decimal(s, pos);
  if (!value || pos != s.size()) throw std::logic_error("decimal_rational: cannot re-read '" + s + "'");
  return negative ? BigRat(-*value) : *value;
}

inline Anchor real_anchor(long point, const ExtendedReal& value) {
  return {BigRat(point), {decimal_rational(value), BigRat(0)}};
}

}  // namespace detail

/// f(z+2) - (z+2) f(z) + (z+2) f(z+1) = 0, f(0) = 1/e, f(1) = 1 - 2/e.
inline AGFSpec f_spec() {
  const Poly2 zp2 = Poly2::z() + Poly2::constant(2);
  const ExtendedReal inv_e = 1 / e_v<ExtendedReal>();
  return AGFSpec({RationalFn(-zp2), RationalFn(zp2), RationalFn::constant(1)},
                 {detail::real_anchor(0, inv_e), detail::real_anchor(1, 1 - 2 * inv_e)}, "f");
}

/// g(z+2) - g(z) + g(z+1)/(z+1) = 0, g(0) = sqrt(2/pi), g(1) = (pi-2)/sqrt(2 pi).
inline AGFSpec g_spec() {
  using std::sqrt;
  const ExtendedReal pi = pi_v<ExtendedReal>();
  return AGFSpec({RationalFn::constant(-1), RationalFn(Poly2::constant(1), Poly2::z() + Poly2::constant(1)),
                  RationalFn::constant(1)},
                 {detail::real_anchor(0, ExtendedReal(sqrt(2 / pi))), detail::real_anchor(1, ExtendedReal((pi - 2) / sqrt(2 * pi)))},
                 "g");
}

/// z h(z) - h(z+1) = 0, h(1) = 1.
inline AGFSpec gamma_spec() {
  return AGFSpec({RationalFn(Poly2::z()), RationalFn::constant(-1)}, {{BigRat(1), {BigRat(1), BigRat(0)}}}, "gamma");
}

template <class Real>
using ComplexFn = std::function<Complex<Real>(const Complex<Real>&)>;

template <class Real>
struct AfeResidual {
  Complex<Real> residual;
  /// max_k |R_k(z) h(z+k)|
  Real scale;

  Real relative() const { return scale == 0 ? agf::abs(residual) : agf::abs(residual) / scale; }
};

/// sum_k R_k(z) h(z+k) and the largest term magnitude.
template <class Real>
AfeResidual<Real> afe_residual_terms(const AGFSpec& spec, const ComplexFn<Real>& h, const Complex<Real>& z) {
  AfeResidual<Real> out{Complex<Real>(0), Real(0)};
  for (int k = 0; k <= spec.order(); ++k) {
    const Complex<Real> t = spec.coefficient(k, z) * h(z + Complex<Real>(Real(k)));
    out.residual += t;
    const Real m = abs(t);
    if (m > out.scale) out.scale = m;
  }
  return out;
}

template <class Real>
Complex<Real> afe_residual(const AGFSpec& spec, const ComplexFn<Real>& h, const Complex<Real>& z) {
  return afe_residual_terms(spec, h, z).residual;
}

struct GridSpec {
  double re_min = -1.5;
  double re_max = 5;
  double im_min = -5;
  double im_max = 5;
  double step = 0.5;

  void validate() const {
    if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
    if (re_min > re_max || im_min > im_max) throw std::invalid_argument("grid bounds are reversed");
  }

  /// Row-major in Re, then Im; endpoints included.
  template <class Real>
  std::vector<Complex<Real>> points() const {
    validate();
    std::vector<Complex<Real>> out;
    const long nr = std::lround((re_max - re_min) / step);
    const long ni = std::lround((im_max - im_min) / step);
    for (long i = 0; i <= nr; ++i)
      for (long j = 0; j <= ni; ++j)
        out.emplace_back(Real(re_min + static_cast<double>(i) * step), Real(im_min + static_cast<double>(j) * step));
    return out;
  }
};

/// Points closer than this to a pole of h or of a coefficient are skipped.
inline constexpr double kPoleExclusion = 1e-3;

/// True when z + k comes within kPoleExclusion of a pole of h for some
/// k <= order, or some coefficient denominator is that small at z.
template <class Real>
bool near_afe_pole(const AGFSpec& spec, const PoleSet& poles, const Complex<Real>& z) {
  for (int k = 0; k <= spec.order(); ++k) {
    if (poles.distance(z + Complex<Real>(Real(k))) < Real(kPoleExclusion)) return true;
    const Poly2& den = spec.coefficients()[static_cast<std::size_t>(k)].denominator();
    if (abs(den.evaluate(Complex<Real>(0), z)) < Real(kPoleExclusion)) return true;
  }
  return false;
}

template <class Real>
struct GridResidualReport {
  Real max_relative = 0;
  Complex<Real> worst_point{Real(0)};
  int evaluated = 0;
  int skipped = 0;
};

template <class Real>
GridResidualReport<Real> afe_residual_grid(const AGFSpec& spec, const ComplexFn<Real>& h, const PoleSet& poles,
                                           const GridSpec& grid) {
  GridResidualReport<Real> out;
  for (const auto& z : grid.points<Real>()) {
    if (near_afe_pole(spec, poles, z)) {
      ++out.skipped;
      continue;
    }
    const Real rel = afe_residual_terms(spec, h, z).relative();
    ++out.evaluated;
    if (rel > out.max_relative) {
      out.max_relative = rel;
      out.worst_point = z;
    }
  }
  return out;
}

enum class RegularityClass { Regular, Irregular };

inline const char* to_string(RegularityClass c) { return c == RegularityClass::Regular ? "Regular" : "Irregular"; }

/// Regular iff every R_k / R_r has a finite limit as |z| -> infinity, decided
/// by comparing z-degrees of the exact numerators and denominators.
inline RegularityClass classify_regularity(const AGFSpec& spec) {
  const RationalFn& top = spec.coefficients().back();
  for (int k = 0; k < spec.order(); ++k) {
    const RationalFn& c = spec.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const int num_degree = (c.numerator() * top.denominator()).degree_z();
    const int den_degree = (c.denominator() * top.numerator()).degree_z();
    if (num_degree > den_degree) return RegularityClass::Irregular;
  }
  return RegularityClass::Regular;
}

enum class GrowthNormalization {
  None,           // |h(z)|
  InverseLinear,  // |h(z) (z+2) - 1|
  InverseSqrt,    // |h(z) sqrt(z)|
};

template <class Real>
struct GrowthSample {
  Real im;
  Real magnitude;
  Real normalized;
};

template <class Real>
std::vector<GrowthSample<Real>> growth_probe(const ComplexFn<Real>& h, Real re_anchor, const std::vector<Real>& im_values,
                                             GrowthNormalization norm = GrowthNormalization::None) {
  std::vector<GrowthSample<Real>> out;
  for (const Real& im : im_values) {
    const Complex<Real> z(re_anchor, im);
    const Complex<Real> v = h(z);
    Real normalized = abs(v);
    switch (norm) {
      case GrowthNormalization::None:
        break;
      case GrowthNormalization::InverseLinear:
        normalized = abs(v * (z + Complex<Real>(Real(2))) - Complex<Real>(Real(1)));
        break;
      case GrowthNormalization::InverseSqrt:
        normalized = abs(v * sqrt(z));
        break;
    }
    out.push_back({im, abs(v), normalized});
  }
  return out;
}

/// h(z0 + k), k = 0..len, from the anchor values by forward use of the AFE.
/// The basis solutions are propagated exactly in rational arithmetic and
/// combined with the anchors in Real at the end, so only the anchors carry
/// rounding.
template <class Real>
std::vector<Complex<Real>> afe_propagate(const AGFSpec& spec, const BigRat& z0, const std::vector<Complex<Real>>& anchor_values,
                                         int len) {
  const int r = spec.order();
  if (static_cast<int>(anchor_values.size()) != r) throw std::invalid_argument("afe_propagate: need r anchor values");
  if (len < 0) throw std::invalid_argument("afe_propagate: negative length");
  // basis[j][k]: solution with h(z0+i) = delta_{ij} for i < r
  std::vector<std::vector<BigRat>> basis(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) basis[static_cast<std::size_t>(j)].push_back(i == j ? 1 : 0);
  for (int k = 0; k + r <= len; ++k) {
    const BigRat z = z0 + k;
    std::vector<BigRat> c(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) c[static_cast<std::size_t>(i)] = spec.coefficient(i, z);
    if (c[static_cast<std::size_t>(r)] == 0) throw pole_error("afe_propagate: R_r vanishes on the path");
    for (auto& b : basis) {
      BigRat acc = 0;
      for (int i = 0; i < r; ++i) acc += c[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k + i)];
      b.push_back(-acc / c[static_cast<std::size_t>(r)]);
    }
  }
  std::vector<Complex<Real>> out;
  for (int k = 0; k <= len; ++k) {
    Complex<Real> v(0);
    for (int j = 0; j < r; ++j) {
      v += anchor_values[static_cast<std::size_t>(j)] * to_real<Real>(basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    }
    out.push_back(v);
  }
  return out;
}

template <class Real>
struct UniquenessReport {
  Real max_abs = 0;
  Real max_rel = 0;
};

/// Compares h1 and h2 on z0 + k, k = 0..grid_len. Both should share the
/// anchors; only integer translates are examined.
template <class Real>
UniquenessReport<Real> uniqueness_probe(const ComplexFn<Real>& h1, const ComplexFn<Real>& h2, const BigRat& z0, int grid_len) {
  UniquenessReport<Real> out;
  for (int k = 0; k <= grid_len; ++k) {
    const Complex<Real> z(to_real<Real>(z0 + k));
    const Complex<Real> a = h1(z);
    const Complex<Real> b = h2(z);
    const Real d = abs(a - b);
    const Real m = abs(a);
    if (d > out.max_abs) out.max_abs = d;
    if (m > 0 && d / m > out.max_rel) out.max_rel = d / m;
  }
  return out;
}

/// uniqueness_probe of h against its own AFE continuation from h(z0..z0+r-1).
template <class Real>
UniquenessReport<Real> uniqueness_probe(const AGFSpec& spec, const ComplexFn<Real>& h, const BigRat& z0, int grid_len) {
  std::vector<Complex<Real>> anchors;
  for (int j = 0; j < spec.order(); ++j) anchors.push_back(h(Complex<Real>(to_real<Real>(z0 + j))));
  const auto propagated = afe_propagate(spec, z0, anchors, grid_len);
  ComplexFn<Real> h2 = [&](const Complex<Real>& z) {
    const long k = std::lround(static_cast<double>(z.re - to_real<Real>(z0)));
    return propagated.at(static_cast<std::size_t>(k));
  };
  return uniqueness_probe<Real>(h, h2, z0, grid_len);
}

/// |(-1)^m f(m)/f(0) - (a_m - e b_m)| / (a_m + e b_m).
template <class Real>
Real duality_residual_e(long m) {
  const LinearFormE form = duality_form_e(m);
  const Real lhs = (m % 2 == 0 ? 1 : -1) * f_eval(Complex<Real>(Real(m))).re / f_eval(Complex<Real>(0)).re;
  using std::abs;
  return abs(lhs - form.value<Real>()) / form.magnitude<Real>();
}

/// |(-1)^m g(m)/g(0) - (p_m - pi q_m)| / (p_m + pi q_m).
template <class Real>
Real duality_residual_pi(long m) {
  const LinearFormPi form = duality_form_pi(m);
  const Real lhs = (m % 2 == 0 ? 1 : -1) * g_eval(Complex<Real>(Real(m))).re / g_eval(Complex<Real>(0)).re;
  using std::abs;
  return abs(lhs - form.value<Real>()) / form.magnitude<Real>();
}

/// Text format:
///   coeff2: 1
///   coeff1: z+2
///   coeff0: -(z+2)
///   z0=0: 0.36787944117144232
///   z0=1: 0.26424111765711535
inline AGFSpec parse_agf_spec(const std::string& content) {
  std::map<int, RationalFn> coeffs;
  std::vector<Anchor> anchors;
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
      coeffs[k] = parse_rational_expression(kv.value, false, kv.line, kv.value_column);
    } else if (kv.key.rfind("z0=", 0) == 0) {
      Anchor a;
      try {
        a.point = parse_rational_literal(kv.key.substr(3));
      } catch (const parse_error&) {
        throw parse_error("bad anchor point '" + kv.key.substr(3) + "'", kv.line, 4);
      }
      try {
        a.value = parse_complex_literal(kv.value);
      } catch (const parse_error& e) {
        throw parse_error(e.what(), kv.line, kv.value_column + e.column());
      }
      anchors.push_back(std::move(a));
    } else {
      throw parse_error("unknown key '" + kv.key + "'", kv.line, 1);
    }
  }
  if (coeffs.empty()) throw parse_error("no coefficients given", 1, 1);
  const int r = coeffs.rbegin()->first;
  std::vector<RationalFn> list(static_cast<std::size_t>(r) + 1);
  for (auto& [k, c] : coeffs) list[static_cast<std::size_t>(k)] = c;
  std::sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) { return a.point < b.point; });
  try {
    return AGFSpec(std::move(list), std::move(anchors));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 1, 1);
  }
}

inline AGFSpec load_agf_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open AFE file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_agf_spec(buf.str());
}

}  // namespace agf
