// agf-lab: evaluate mirror sequences and additive Gamma functions, run the
// verification suites, and write tables.
//
//   agf-lab seq e 0 5
//   agf-lab limit gamma 0.5
//   agf-lab agf g 1.5+2i --digits 30
//   agf-lab verify all --format json
//   agf-lab table duality-pi --out dpi.csv

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agf/agf.hpp"
#include "agf/connection.hpp"
#include "agf/io.hpp"
#include "agf/recurrence.hpp"
#include "agf/verify.hpp"

namespace {

using agf::BigRat;
using agf::Complex;
using agf::ExtendedReal;
using agf::json;

enum class Format { Text, Csv, Json };

struct Config {
  int digits = 15;
  long n_max = 0;  // 0: command default
  std::string format = "text";
  std::string grid_text;
  std::uint64_t seed = agf::kDefaultSeed;
  std::string out_path;

  agf::GridSpec grid;
  Format fmt = Format::Text;
  bool extended() const { return digits > 15; }
};

/// "re_min,re_max,im_min,im_max,step"
agf::GridSpec parse_grid(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--grid", "bad number '" + item + "'");
    }
  }
  if (v.size() != 5) throw CLI::ValidationError("--grid", "expected re_min,re_max,im_min,im_max,step");
  agf::GridSpec g{v[0], v[1], v[2], v[3], v[4]};
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--grid", e.what());
  }
  return g;
}

/// Output sink: stdout or --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

/// Rows with a header, rendered as aligned text, CSV or a JSON array of objects.
void emit_table(std::ostream& os, Format fmt, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows, json meta = json::object()) {
  if (fmt == Format::Csv) {
    agf::write_csv_row(os, header);
    for (const auto& r : rows) agf::write_csv_row(os, r);
  } else if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    meta["rows"] = arr;
    os << meta.dump(2) << "\n";
  } else {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
}

agf::PRecurrence world_recurrence(const std::string& world) {
  if (world == "e") return agf::mirror_e();
  if (world == "pi") return agf::mirror_pi();
  if (world == "gamma") return agf::gamma_recurrence();
  return agf::load_recurrence(world);
}

template <class Real>
std::string fmt_complex(const Complex<Real>& z, int digits) {
  return agf::to_string(z, digits);
}

// ---- seq ------------------------------------------------------------------

template <class Real>
std::vector<std::vector<std::string>> seq_numeric(const agf::PRecurrence& rec, const Complex<Real>& z, long n_max,
                                                  int digits) {
  std::vector<std::vector<std::string>> rows;
  agf::iterate_sequence(rec, z, n_max, [&](long n, const Complex<Real>& v) {
    rows.push_back({std::to_string(n), fmt_complex(v, digits)});
  });
  return rows;
}

int cmd_seq(const Config& cfg, const std::string& world, const std::string& z_text, long n_max, bool numeric) {
  const agf::PRecurrence rec = world_recurrence(world);
  const agf::ComplexLiteral z = agf::parse_complex_literal(z_text);
  if (n_max <= 0) n_max = cfg.n_max > 0 ? cfg.n_max : 20;
  std::vector<std::vector<std::string>> rows;
  bool exact = z.is_real() && !numeric;
  if (exact) {
    agf::iterate_sequence(rec, z.re, n_max, [&](long n, const BigRat& v) { rows.push_back({std::to_string(n), v.str()}); });
  } else if (cfg.extended()) {
    rows = seq_numeric(rec, z.to_complex<ExtendedReal>(), n_max, cfg.digits);
  } else {
    rows = seq_numeric(rec, Complex<long double>(z.to_complex<double>()), n_max, cfg.digits);
  }
  Output out(cfg.out_path);
  emit_table(out.os(), cfg.fmt, {"n", "value"}, rows,
             {{"command", "seq"}, {"world", world}, {"z", z_text}, {"exact", exact}});
  return 0;
}

// ---- limit ----------------------------------------------------------------

template <class Real>
agf::ExtrapolationResult<Real> run_limit(const std::string& world, const Complex<Real>& z,
                                         const agf::ExtrapolationConfig& ec) {
  if (world == "e") return agf::estimate_connection_constant(agf::mirror_e(), agf::f_shell<Real>(), z, ec);
  if (world == "pi") return agf::estimate_connection_constant(agf::mirror_pi(), agf::g_shell<Real>(), z, ec);
  if (world == "gamma") return agf::estimate_connection_constant(agf::gamma_recurrence(), agf::gamma_shell<Real>(), z, ec);
  throw CLI::ValidationError("world", "expected e, pi or gamma");
}

template <class Real>
int limit_impl(const Config& cfg, const std::string& world, const agf::ComplexLiteral& z, int depth) {
  agf::ExtrapolationConfig ec;
  ec.depth = depth;
  if (cfg.n_max > 0) ec.n_base = cfg.n_max >> depth;
  const auto res = run_limit<Real>(world, z.to_complex<Real>(), ec);
  const std::string value = fmt_complex(res.value, cfg.digits);
  const std::string err = agf::real_to_string(res.error_estimate, 3);
  Output out(cfg.out_path);
  if (cfg.fmt == Format::Json) {
    out.os() << json{{"command", "limit"}, {"world", world}, {"value", value}, {"error_estimate", err},
                     {"n_max", ec.sample_n(ec.depth)}}
                    .dump(2)
             << "\n";
  } else if (cfg.fmt == Format::Csv) {
    emit_table(out.os(), cfg.fmt, {"world", "value", "error_estimate"}, {{world, value, err}});
  } else {
    out.os() << value << " +- " << err << "\n";
  }
  return 0;
}

// ---- agf ------------------------------------------------------------------

template <class Real>
int agf_impl(const Config& cfg, const std::string& which, const agf::ComplexLiteral& z) {
  Complex<Real> v;
  if (which == "f") {
    v = agf::f_eval(z.to_complex<Real>());
  } else if (which == "g") {
    v = agf::g_eval(z.to_complex<Real>());
  } else {
    throw CLI::ValidationError("which", "expected f or g");
  }
  // drop the imaginary part for real arguments
  const std::string text = z.is_real() ? agf::real_to_string(v.re, cfg.digits) : fmt_complex(v, cfg.digits);
  Output out(cfg.out_path);
  if (cfg.fmt == Format::Json) {
    out.os() << json{{"command", "agf"}, {"function", which}, {"value", text}}.dump(2) << "\n";
  } else if (cfg.fmt == Format::Csv) {
    emit_table(out.os(), cfg.fmt, {"function", "value"}, {{which, text}});
  } else {
    out.os() << text << "\n";
  }
  return 0;
}

// ---- table ----------------------------------------------------------------

std::string num(double x) { return agf::real_to_string(x, 17); }

std::vector<std::vector<std::string>> table_duality_e(int m_max) {
  std::vector<std::vector<std::string>> rows;
  for (int m = 0; m <= m_max; ++m) {
    const auto form = agf::duality_form_e(m);
    rows.push_back({std::to_string(m), form.a.str(), form.b.str(), num(agf::f_eval(Complex<double>(m)).re),
                    num(agf::duality_residual_e<double>(m))});
  }
  return rows;
}

std::vector<std::vector<std::string>> table_duality_pi(int m_max) {
  std::vector<std::vector<std::string>> rows;
  for (int m = 0; m <= m_max; ++m) {
    const auto form = agf::duality_form_pi(m);
    rows.push_back({std::to_string(m), agf::to_fraction_string(form.p), agf::to_fraction_string(form.q),
                    num(agf::g_eval(Complex<double>(m)).re), num(agf::duality_residual_pi<double>(m))});
  }
  return rows;
}

std::vector<std::vector<std::string>> table_agf_grid(const agf::GridSpec& grid) {
  using C = Complex<double>;
  const agf::ComplexFn<double> f = [](const C& z) { return agf::f_eval(z); };
  const agf::ComplexFn<double> g = [](const C& z) { return agf::g_eval(z); };
  const auto fs = agf::f_spec();
  const auto gs = agf::g_spec();
  std::vector<std::vector<std::string>> rows;
  for (const auto& z : grid.points<double>()) {
    auto value = [&](const agf::PoleSet& poles, const agf::ComplexFn<double>& h) {
      return poles.contains(z) ? std::string("pole") : agf::to_string(h(z), 17);
    };
    auto residual = [&](const agf::AGFSpec& spec, const agf::PoleSet& poles, const agf::ComplexFn<double>& h) {
      if (agf::near_afe_pole(spec, poles, z)) return std::string("pole");
      return num(agf::afe_residual_terms(spec, h, z).relative());
    };
    rows.push_back({agf::to_string(z, 17), value(agf::kPolesF, f), value(agf::kPolesG, g), residual(fs, agf::kPolesF, f),
                    residual(gs, agf::kPolesG, g)});
  }
  return rows;
}

const std::vector<std::string> kDualityEHeader = {"m", "a", "b", "f_m", "residual"};
const std::vector<std::string> kDualityPiHeader = {"m", "p", "q", "g_m", "residual"};
const std::vector<std::string> kGridHeader = {"z", "f", "g", "f_afe_residual", "g_afe_residual"};

int cmd_table(const Config& cfg, const std::string& kind, int m_max) {
  Format fmt = cfg.format == "text" ? Format::Csv : cfg.fmt;  // tables default to CSV
  Output out(cfg.out_path);
  if (kind == "duality-e") {
    emit_table(out.os(), fmt, kDualityEHeader, table_duality_e(m_max), {{"table", kind}});
  } else if (kind == "duality-pi") {
    emit_table(out.os(), fmt, kDualityPiHeader, table_duality_pi(m_max), {{"table", kind}});
  } else if (kind == "agf-grid") {
    emit_table(out.os(), fmt, kGridHeader, table_agf_grid(cfg.grid), {{"table", kind}});
  } else {
    throw CLI::ValidationError("kind", "expected duality-e, duality-pi or agf-grid");
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

/// Re-reads a table written by `table` and checks it against fresh values.
/// Residuals may not exceed the stored ones.
agf::CertificateReport revalidate_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open table '" + path + "'");
  const agf::CsvTable t = agf::read_csv(in);
  if (t.empty()) throw std::runtime_error("empty table '" + path + "'");
  agf::CertificateReport r;
  r.params = {{"table", path}};
  const auto& header = t[0];
  if (header == kDualityEHeader || header == kDualityPiHeader) {
    const bool e_world = header == kDualityEHeader;
    r.check = e_world ? "table:duality-e" : "table:duality-pi";
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto& row = t[i];
      if (row.size() != header.size()) throw std::runtime_error("row " + std::to_string(i) + " has the wrong width");
      const long m = std::stol(row[0]);
      double fresh = 0;
      bool exact_ok = true;
      if (e_world) {
        const auto form = agf::duality_form_e(m);
        exact_ok = form.a.str() == row[1] && form.b.str() == row[2];
        fresh = agf::duality_residual_e<double>(m);
      } else {
        const auto form = agf::duality_form_pi(m);
        exact_ok = form == agf::LinearFormPi{agf::parse_fraction(row[1]), agf::parse_fraction(row[2])};
        fresh = agf::duality_residual_pi<double>(m);
      }
      r.add("exact-form", m, exact_ok ? 0 : 1, 0);
      const double stored = parse_double(row[4]);
      r.add("residual", m, fresh, 1e-9);
      r.add("no-growth", m, std::max(0.0, fresh - stored), 0);
    }
  } else if (header == kGridHeader) {
    r.check = "table:agf-grid";
    using C = Complex<double>;
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto& row = t[i];
      if (row.size() != header.size()) throw std::runtime_error("row " + std::to_string(i) + " has the wrong width");
      const auto lit = agf::parse_complex_literal(row[0]);
      const C z(agf::to_real<double>(lit.re), agf::to_real<double>(lit.im));
      auto check_value = [&](const char* name, const agf::PoleSet& poles, const std::string& cell, auto h) {
        if (cell == "pole") {
          r.add(name, static_cast<long>(i), poles.contains(z) ? 0 : 1, 0);
          return;
        }
        const auto v = agf::parse_complex_literal(cell);
        const C stored(agf::to_real<double>(v.re), agf::to_real<double>(v.im));
        const C fresh = h(z);
        r.add(name, static_cast<long>(i), abs(stored - fresh) / abs(fresh), 1e-12);
      };
      check_value("f", agf::kPolesF, row[1], [](const C& w) { return agf::f_eval(w); });
      check_value("g", agf::kPolesG, row[2], [](const C& w) { return agf::g_eval(w); });
      for (int k : {3, 4}) {
        if (row[static_cast<std::size_t>(k)] == "pole") continue;
        r.add(k == 3 ? "f-afe-residual" : "g-afe-residual", static_cast<long>(i), parse_double(row[static_cast<std::size_t>(k)]),
              1e-10);
      }
    }
  } else {
    throw std::runtime_error("unrecognised table header in '" + path + "'");
  }
  return r;
}

int cmd_verify(const Config& cfg, const std::string& suite, const std::string& table_path) {
  agf::SuiteOptions opt;
  opt.grid = cfg.grid;
  opt.seed = cfg.seed;
  std::vector<agf::CertificateReport> reports;
  if (!table_path.empty()) {
    reports.push_back(revalidate_table(table_path));
  } else {
    reports = agf::run_suite(suite, opt);
  }
  bool pass = true;
  std::optional<std::string> first_failure;
  for (const auto& r : reports) {
    if (r.pass) continue;
    pass = false;
    for (const auto& d : r.details) {
      if (!d.pass() && !first_failure) first_failure = r.check + "/" + d.name + (d.m >= 0 ? "[m=" + std::to_string(d.m) + "]" : "");
    }
  }
  Output out(cfg.out_path);
  if (cfg.fmt == Format::Json) {
    json checks = json::array();
    for (const auto& r : reports) checks.push_back(agf::to_json(r));
    json doc = {{"command", "verify"}, {"suite", table_path.empty() ? suite : "table"}, {"seed", cfg.seed},
                {"pass", pass}, {"checks", checks}};
    doc["first_failure"] = first_failure ? json(*first_failure) : json(nullptr);
    out.os() << doc.dump(2) << "\n";
  } else if (cfg.fmt == Format::Csv) {
    agf::write_csv_row(out.os(), {"check", "item", "m", "deviation", "tolerance", "pass"});
    for (const auto& r : reports)
      for (const auto& d : r.details)
        agf::write_csv_row(out.os(), {r.check, d.name, std::to_string(d.m), num(d.deviation), num(d.tolerance),
                                      d.pass() ? "true" : "false"});
  } else {
    for (const auto& r : reports) {
      out.os() << (r.pass ? "PASS " : "FAIL ") << r.check << "  max_deviation=" << agf::real_to_string(r.max_deviation, 3)
               << "  items=" << r.details.size() << "\n";
      for (const auto& d : r.details) {
        if (d.pass()) continue;
        out.os() << "  FAIL " << d.name << (d.m >= 0 ? " m=" + std::to_string(d.m) : "") << " deviation=" << d.deviation
                 << " tolerance=" << d.tolerance << "\n";
      }
    }
  }
  if (!pass) std::cerr << "verify: first failing check: " << *first_failure << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive Gamma function lab: mirror recurrences, connection constants, certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Config cfg;
  app.add_option("--digits", cfg.digits, "Significant digits; above 15 switches to 50-digit arithmetic")
      ->check(CLI::Range(1, 50));
  app.add_option("--n-max", cfg.n_max, "Largest sequence index")->check(CLI::Range(16L, 100000000L));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--grid", cfg.grid_text, "re_min,re_max,im_min,im_max,step");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--out", cfg.out_path, "Write output to this file");

  std::string world, z_text, which, suite = "all", kind, table_path;
  long seq_n = 0;
  bool numeric = false;
  int depth = 6, m_max = 10;

  auto* seq = app.add_subcommand("seq", "Print u_n for a built-in world (e, pi, gamma) or a recurrence file");
  seq->add_option("world", world, "e | pi | gamma | path")->required();
  seq->add_option("z", z_text, "Parameter (rational or complex literal)")->required();
  seq->add_option("n_max", seq_n, "Last index (default --n-max or 20)");
  seq->add_flag("--numeric", numeric, "Floating iteration even for rational z");

  auto* limit = app.add_subcommand("limit", "Extrapolated connection constant");
  limit->add_option("world", world, "e | pi | gamma")->required()->check(CLI::IsMember({"e", "pi", "gamma"}));
  limit->add_option("z", z_text, "Parameter")->required();
  limit->add_option("--depth", depth, "Richardson depth")->check(CLI::Range(1, 20));

  auto* agfcmd = app.add_subcommand("agf", "Evaluate f(z) or g(z)");
  agfcmd->add_option("which", which, "f | g")->required()->check(CLI::IsMember({"f", "g"}));
  agfcmd->add_option("z", z_text, "Complex literal a+bi")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit status 1 on any failure");
  verify->add_option("suite", suite, "afe | duality | ode | slope | growth | chains | regularity | all")
      ->check(CLI::IsMember({"afe", "duality", "ode", "slope", "growth", "chains", "regularity", "all"}));
  verify->add_option("--table", table_path, "Re-validate a table written by `table`");

  auto* table = app.add_subcommand("table", "Write a CSV table");
  table->add_option("kind", kind, "duality-e | duality-pi | agf-grid")
      ->required()
      ->check(CLI::IsMember({"duality-e", "duality-pi", "agf-grid"}));
  table->add_option("--m-max", m_max, "Largest m for duality tables")->check(CLI::Range(0, 1000));

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.fmt = cfg.format == "csv" ? Format::Csv : cfg.format == "json" ? Format::Json : Format::Text;
    if (!cfg.grid_text.empty()) cfg.grid = parse_grid(cfg.grid_text);
    if (seq->parsed()) return cmd_seq(cfg, world, z_text, seq_n, numeric);
    if (limit->parsed()) {
      const auto z = agf::parse_complex_literal(z_text);
      return cfg.extended() ? limit_impl<ExtendedReal>(cfg, world, z, depth) : limit_impl<double>(cfg, world, z, depth);
    }
    if (agfcmd->parsed()) {
      const auto z = agf::parse_complex_literal(z_text);
      return cfg.extended() ? agf_impl<ExtendedReal>(cfg, which, z) : agf_impl<double>(cfg, which, z);
    }
    if (verify->parsed()) return cmd_verify(cfg, suite, table_path);
    if (table->parsed()) return cmd_table(cfg, kind, m_max);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const agf::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const agf::coefficient_pole& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const agf::pole_error& e) {
    std::cerr << "pole error: " << e.what() << "\n";
    return 2;
  } catch (const agf::non_convergence& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
