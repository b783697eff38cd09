#pragma once

// JSON records for linear forms and certificate reports, and RFC 4180 CSV.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "agf/certify.hpp"
#include "agf/exact.hpp"
#include "json.hpp"

namespace agf {

using json = nlohmann::json;

inline json to_json(long m, const LinearFormE& form) {
  return {{"m", m}, {"a", form.a.str()}, {"b", form.b.str()}};
}

inline json to_json(long m, const LinearFormPi& form) {
  return {{"m", m}, {"p", to_fraction_string(form.p)}, {"q", to_fraction_string(form.q)}};
}

inline LinearFormE linear_form_e_from_json(const json& j) {
  return {BigInt(j.at("a").get<std::string>()), BigInt(j.at("b").get<std::string>())};
}

inline LinearFormPi linear_form_pi_from_json(const json& j) {
  return {parse_fraction(j.at("p").get<std::string>()), parse_fraction(j.at("q").get<std::string>())};
}

inline json to_json(const CertificateReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json details = json::array();
  for (const auto& d : r.details) {
    details.push_back({{"name", d.name}, {"m", d.m}, {"deviation", d.deviation}, {"tolerance", d.tolerance}, {"pass", d.pass()}});
  }
  return {{"check", r.check}, {"params", params}, {"pass", r.pass}, {"max_deviation", r.max_deviation}, {"details", details}};
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(fields[i]);
  }
  os << "\r\n";
}

using CsvTable = std::vector<std::vector<std::string>>;

/// Quoted fields may contain commas, CRLF and doubled quotes.
inline CsvTable read_csv(std::istream& in) {
  CsvTable rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && in.peek() == '\n') in.get(c);
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw std::runtime_error("read_csv: unterminated quoted field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CsvTable read_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

}  // namespace agf
