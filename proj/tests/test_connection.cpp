#include <gtest/gtest.h>

#include <random>

#include "agf/agf.hpp"
#include "agf/connection.hpp"

using namespace agf;
using C = Complex<double>;

TEST(Shell, ReferenceValues) {
  EXPECT_NEAR(shell_eval(f_shell<double>(), 7, C(0.3, 1)).re, 7, 1e-13);
  EXPECT_NEAR(shell_eval(g_shell<double>(), 9, C(-2)).re, 3, 1e-14);
  EXPECT_NEAR(shell_eval(gamma_shell<double>(), 16, C(1)).re, 1, 1e-15);
  EXPECT_NEAR(shell_eval(gamma_shell<double>(), 16, C(0.5)).re, 4, 1e-14);
}

TEST(Shell, HugeGammaFactorsStayFinite) {
  AsymptoticShell<double> s{C(2), 1, 0.5, {{BigRat(1), C(0.5), -1}, {BigRat(2), C(0), 1}}};
  const C lg = shell_log(s, 1000000, C(0.25, 0.5));
  EXPECT_TRUE(std::isfinite(lg.re) && std::isfinite(lg.im));
  // the Gamma factors nearly cancel, leaving n log 2 plus O(log n)
  EXPECT_NEAR(lg.re, 1e6 * std::log(2.0), 50);
  // ratio of neighbours of a pure Gamma(n+z) shell is n+z
  AsymptoticShell<double> g{C(1), 0, 0, {{BigRat(1), C(0), 1}}};
  const C z(0.3, -0.2);
  EXPECT_LT(abs(exp(shell_log(g, 51, z) - shell_log(g, 50, z)) - (C(50) + z)), 1e-10);
  AsymptoticShell<double> zero{C(0), 0, 0, {}};
  EXPECT_THROW(shell_log(zero, 5, z), std::invalid_argument);
  EXPECT_THROW(shell_log(g, 0, z), std::invalid_argument);
}

TEST(Extrapolation, ConfigValidation) {
  ExtrapolationConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.sample_n(3), 8192);
  cfg.depth = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.n_base = 8;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.n_growth = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Extrapolation, RecoversConstantOfHarmonicTail) {
  // (n+2)u_{n+2} - 2(n+1)u_{n+1} + n u_n = 0 has solutions c + d/n
  const BigRat c(3, 7);
  const PRecurrence rec({RationalFn(Poly2::n()), RationalFn((Poly2::n() + Poly2::constant(1)) * BigRat(-2)),
                         RationalFn(Poly2::n() + Poly2::constant(2))},
                        1, {c + 1, c + BigRat(1, 2)});
  const AsymptoticShell<double> flat{C(1), 0, 0.0, {}};
  const auto r = estimate_connection_constant(rec, flat, C(0));
  EXPECT_NEAR(r.value.re, 3.0 / 7, 1e-12);
  EXPECT_EQ(r.diagonal.size(), 7u);
}

TEST(Extrapolation, DivergingSamplesThrow) {
  std::vector<C> s;
  for (int k = 0; k < 8; ++k) s.emplace_back(std::pow(-3.0, k * k), 0);
  EXPECT_THROW(richardson<double>(s, 2), non_convergence);
  EXPECT_THROW(richardson<double>(std::span<const C>(s.data(), 1), 2), std::invalid_argument);
}

TEST(Extrapolation, ConnectionConstants) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(estimate_connection_constant(mirror_e(), f_shell<double>(), C(0)).value.re, 1 / e, 1e-10);
  EXPECT_NEAR(estimate_connection_constant(mirror_pi(), g_shell<double>(), C(0)).value.re, std::sqrt(2 / M_PI),
              1e-8);
  EXPECT_NEAR(estimate_connection_constant(gamma_recurrence(), gamma_shell<double>(), C(0.5)).value.re,
              std::sqrt(M_PI), 1e-10);
  const C z(0.7, 1.1);
  const auto fz = estimate_connection_constant(mirror_e(), f_shell<double>(), z).value;
  EXPECT_LT(abs(fz - f_eval(z)), 1e-9);
  const C w(2, 1);
  const auto gw = estimate_connection_constant(gamma_recurrence(), gamma_shell<double>(), w).value;
  EXPECT_LT(abs(gw - gamma(w)) / abs(gamma(w)), 1e-9);
}

TEST(Extrapolation, MirrorLimits) {
  EXPECT_NEAR(mirror_limit_e<double>().value.re, std::exp(1.0), 1e-10);
  EXPECT_NEAR(mirror_limit_pi<double>().value.re, M_PI, 1e-10);
}

TEST(Slope, IntegerSlopes) {
  const auto one = slope_ratio<double>(BigRat(1), C(0));
  ASSERT_TRUE(one.is_rational());
  EXPECT_LT(abs(one.evaluate(C(2.5, 1)) - C(2.5, 1)), 1e-15);
  EXPECT_EQ(one.to_string(), "(1z)");
  const auto two = slope_ratio<double>(BigRat(2), C(0));
  EXPECT_EQ(two.to_string(), "(2z)(2z + 1)");
  EXPECT_EQ(slope_ratio_exact(BigRat(2), BigRat(0)),
            RationalFn(Poly2::z() * Poly2::z() * BigRat(4) + Poly2::z() * BigRat(2)));
  const auto neg = slope_ratio<double>(BigRat(-1), C(0));
  EXPECT_TRUE(neg.reciprocal);
  EXPECT_EQ(neg.to_string(), "1/((-1z - 1))");
  EXPECT_EQ(slope_ratio_exact(BigRat(-1), BigRat(0)), RationalFn(Poly2::constant(1), -Poly2::z() - Poly2::constant(1)));
  EXPECT_THROW(neg.evaluate(C(-1)), pole_error);
}

TEST(Slope, NonIntegerSlopes) {
  const auto half = slope_ratio<double>(BigRat(1, 2), C(0));
  EXPECT_FALSE(half.is_rational());
  EXPECT_EQ(half.to_string(), "non-rational");
  EXPECT_FALSE(slope_ratio_exact(BigRat(3, 2), BigRat(1)).has_value());
  EXPECT_THROW(half.evaluate(C(1)), std::logic_error);
  EXPECT_THROW(slope_ratio<double>(BigRat(0), C(0)), std::invalid_argument);
  // the half-slope ratio grows like sqrt(z/2), which no rational function does
  const double big = 1e6;
  const C r = exp(log_gamma(C(big / 2 + 0.5)) - log_gamma(C(big / 2)));
  EXPECT_NEAR(r.re / std::sqrt(big / 2), 1, 1e-5);
}

TEST(Slope, IntegerSlopeMatrixProperty) {
  std::mt19937_64 rng(301);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const C beta(u(rng), u(rng));
      const auto res = slope_ratio<double>(BigRat(k), beta);
      ASSERT_TRUE(res.is_rational());
      EXPECT_EQ(res.shifts.size(), static_cast<std::size_t>(std::abs(k)));
      std::vector<C> samples;
      for (int i = 0; i < 20; ++i) samples.emplace_back(u(rng), u(rng));
      EXPECT_LT(slope_ratio_numeric_check<double>(res, beta, samples), 1e-10) << "k=" << k;
    }
  }
}

TEST(Slope, ExactAndFloatingFormsAgree) {
  std::mt19937_64 rng(302);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k : {-2, 1, 3}) {
    const BigRat beta(1, 3);
    const auto exact = *slope_ratio_exact(BigRat(k), beta);
    const auto num = slope_ratio<double>(BigRat(k), C(1.0 / 3));
    for (int i = 0; i < 10; ++i) {
      const C z(u(rng), u(rng));
      EXPECT_LT(abs(exact.evaluate(C(0), z) - num.evaluate(z)) / abs(num.evaluate(z)), 1e-13);
    }
  }
}
