#pragma once

// Verification suites shared by the command-line tool: each returns
// certificate reports with per-item deviations and tolerances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "agf/agf.hpp"
#include "agf/certify.hpp"
#include "agf/connection.hpp"

namespace agf {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  GridSpec grid;
  std::uint64_t seed = kDefaultSeed;
  int duality_m_max = 15;
  int exact_m_max = 100;
  int ode_order = 200;
  int ode_m_max = 8;
};

inline CertificateReport verify_afe(const SuiteOptions& opt) {
  using C = Complex<double>;
  CertificateReport r;
  r.check = "afe";
  r.params = {{"grid", std::to_string(opt.grid.re_min) + "," + std::to_string(opt.grid.re_max) + "," +
                           std::to_string(opt.grid.im_min) + "," + std::to_string(opt.grid.im_max) + "," +
                           std::to_string(opt.grid.step)}};
  const ComplexFn<double> f = [](const C& z) { return f_eval(z); };
  const ComplexFn<double> g = [](const C& z) { return g_eval(z); };
  r.add("f-residual", -1, afe_residual_grid(f_spec(), f, kPolesF, opt.grid).max_relative, 1e-10);
  r.add("g-residual", -1, afe_residual_grid(g_spec(), g, kPolesG, opt.grid).max_relative, 1e-10);

  double worst = 0;
  for (const auto& z : opt.grid.points<double>()) {
    if (kPolesF.distance(z) < kPoleExclusion) continue;
    const C a = f_eval(z);
    worst = std::max(worst, abs(f_via_incomplete_gamma(z) - a) / abs(a));
    if (abs(z + C(1)) >= kPoleExclusion) worst = std::max(worst, abs(f_via_hyp1f1(z) - a) / abs(a));
  }
  r.add("f-three-routes", -1, worst, 1e-11);

  const ComplexFn<double> G = [](const C& z) { return gamma(z); };
  r.add("gamma-residual", -1, afe_residual_grid(gamma_spec(), G, kPolesGamma, opt.grid).max_relative, 1e-12);
  return r;
}

inline CertificateReport verify_duality(const SuiteOptions& opt) {
  CertificateReport r;
  r.check = "duality";
  r.params = {{"m_max", std::to_string(opt.duality_m_max)}, {"exact_m_max", std::to_string(opt.exact_m_max)}};
  for (int m = 0; m <= opt.duality_m_max; ++m) {
    r.add("e-world", m, duality_residual_e<double>(m), 1e-9);
    r.add("pi-world", m, duality_residual_pi<double>(m), 1e-9);
  }
  const auto e_rec = duality_forms_e_by_recurrence(opt.exact_m_max);
  const auto pi_rec = duality_forms_pi_by_recurrence(opt.exact_m_max);
  int e_mismatch = 0, pi_mismatch = 0;
  for (int m = 0; m <= opt.exact_m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    if (!(e_rec[k] == LinearFormE{factorial(m + 1), derangement(m + 1)})) ++e_mismatch;
    if (!(pi_rec[k] == duality_form_pi_closed(m))) ++pi_mismatch;
  }
  r.add("e-exact-forms", opt.exact_m_max, e_mismatch, 0);
  r.add("pi-exact-forms", opt.exact_m_max, pi_mismatch, 0);
  return r;
}

inline CertificateReport verify_ode(const SuiteOptions& opt) {
  CertificateReport r;
  r.check = "ode";
  r.params = {{"N", std::to_string(opt.ode_order)}, {"m_max", std::to_string(opt.ode_m_max)}};
  auto add = [&](const char* name, long m, const OdeCheckResult& res) {
    // deviation is the first failing order, 0 for an exact pass
    r.add(name, m, res.pass ? 0.0 : static_cast<double>(*res.first_failure) + 1, 0);
  };
  for (int m = 0; m <= opt.ode_m_max; ++m) {
    add("e-ode", m, ode_series_check_e(m, opt.ode_order));
    add("pi-ode", m, ode_series_check_pi(m, opt.ode_order));
    add("gamma-ode", m, ode_series_check_gamma(BigRat(m), opt.ode_order));
  }
  return r;
}

/// Integer alpha in {-4..-1, 1..4} with 5 random beta each must give a rational
/// form matching the Gamma ratio; a few non-integer alpha must not.
inline CertificateReport verify_slope(const SuiteOptions& opt) {
  using C = Complex<double>;
  CertificateReport r;
  r.check = "slope";
  r.params = {{"seed", std::to_string(opt.seed)}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> part(-2.0, 2.0);
  std::uniform_real_distribution<double> imag(0.25, 2.0);
  auto random_point = [&] { return C(part(rng), (rng() & 1 ? 1 : -1) * imag(rng)); };
  for (int a = -4; a <= 4; ++a) {
    if (a == 0) continue;
    double worst = 0;
    for (int b = 0; b < 5; ++b) {
      const C beta = random_point();
      const auto res = slope_ratio<double>(BigRat(a), beta);
      if (!res.is_rational()) {
        worst = 1;
        continue;
      }
      std::vector<C> samples;
      for (int s = 0; s < 20; ++s) samples.push_back(random_point());
      worst = std::max(worst, slope_ratio_numeric_check<double>(res, beta, samples));
    }
    r.add("integer-alpha", a, worst, 1e-9);
  }
  const std::vector<BigRat> fractional = {BigRat(1, 2), BigRat(-1, 2), BigRat(3, 2), BigRat(-3, 2), BigRat(5, 3)};
  int wrong = 0;
  for (const auto& a : fractional)
    if (slope_ratio<double>(a, random_point()).is_rational()) ++wrong;
  r.add("non-integer-alpha", -1, wrong, 0);
  return r;
}

inline CertificateReport verify_growth(const SuiteOptions&) {
  using C = Complex<double>;
  CertificateReport r;
  r.check = "growth";
  r.params = {{"re", "1"}, {"im", "10,20,40,80"}};
  const std::vector<double> ims = {10, 20, 40, 80};
  const auto f = growth_probe<double>([](const C& z) { return f_eval(z); }, 1.0, ims, GrowthNormalization::InverseLinear);
  int increases = 0;
  for (std::size_t k = 1; k < f.size(); ++k)
    if (f[k].normalized >= f[k - 1].normalized) ++increases;
  r.add("f-decreasing", -1, increases, 0);
  r.add("f-final", -1, f.back().normalized, 0.05);
  const auto g = growth_probe<double>([](const C& z) { return g_eval(z); }, 1.0, ims, GrowthNormalization::InverseSqrt);
  const double a = g[g.size() - 2].normalized, b = g.back().normalized;
  r.add("g-variation", -1, std::abs(b - a) / std::max(a, b), 0.25);
  return r;
}

inline CertificateReport verify_chains(const SuiteOptions&) {
  CertificateReport e = identity_chain_e(12);
  CertificateReport pi = identity_chain_pi(12);
  CertificateReport r;
  r.check = "chains";
  r.params = {{"m_max", "12"}};
  for (const auto& d : e.details) r.add("e:" + d.name, d.m, d.deviation, d.tolerance);
  for (const auto& d : pi.details) r.add("pi:" + d.name, d.m, d.deviation, d.tolerance);
  return r;
}

inline CertificateReport verify_regularity(const SuiteOptions&) {
  CertificateReport r;
  r.check = "regularity";
  r.add("g-spec-regular", -1, classify_regularity(g_spec()) == RegularityClass::Regular ? 0 : 1, 0);
  r.add("f-spec-irregular", -1, classify_regularity(f_spec()) == RegularityClass::Irregular ? 0 : 1, 0);
  r.add("gamma-spec-irregular", -1, classify_regularity(gamma_spec()) == RegularityClass::Irregular ? 0 : 1, 0);
  return r;
}

/// Suites by name; "all" runs every suite.
inline std::vector<CertificateReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<CertificateReport> out;
  const bool all = name == "all";
  bool known = all;
  auto run = [&](const char* n, CertificateReport (*fn)(const SuiteOptions&)) {
    if (all || name == n) {
      known = true;
      out.push_back(fn(opt));
    }
  };
  run("afe", verify_afe);
  run("duality", verify_duality);
  run("ode", verify_ode);
  run("slope", verify_slope);
  run("growth", verify_growth);
  run("chains", verify_chains);
  run("regularity", verify_regularity);
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace agf
