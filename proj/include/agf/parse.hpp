#pragma once

// Parsers for rational expressions in n and z, numeric literals, and the
// "key: value" line format shared by recurrence and AFE files.
//
// Expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | implicit-product)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'n' | 'z' | '(' expr ')'
// Decimal numbers are read as exact rationals.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "agf/complex.hpp"
#include "agf/errors.hpp"
#include "agf/exact.hpp"
#include "agf/polynomial.hpp"

namespace agf {

namespace detail {

/// Digits with an optional fractional part and exponent, as an exact rational.
inline std::optional<BigRat> read_decimal(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  BigInt mantissa = 0;
  long scale = 0;
  bool any = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    mantissa = mantissa * 10 + (text[pos++] - '0');
    any = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mantissa = mantissa * 10 + (text[pos++] - '0');
      ++scale;
      any = true;
    }
  }
  if (!any) {
    pos = start;
    return std::nullopt;
  }
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    std::size_t p = pos + 1;
    bool negative = false;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) negative = text[p++] == '-';
    long exponent = 0;
    bool digits = false;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      exponent = exponent * 10 + (text[p++] - '0');
      digits = true;
    }
    if (digits) {
      scale += negative ? exponent : -exponent;
      pos = p;
    }
  }
  BigInt ten_pow = 1;
  for (long i = 0; i < (scale < 0 ? -scale : scale); ++i) ten_pow *= 10;
  return scale >= 0 ? BigRat(mantissa, ten_pow) : BigRat(mantissa * ten_pow);
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int line, int column_offset, bool allow_n)
      : text_(text), line_(line), column_offset_(column_offset), allow_n_(allow_n) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    check_degree(r);
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, line_, column_offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void check_degree(const RationalFn& r) const {
    if (r.max_degree() > kMaxDegree) fail("degree exceeds " + std::to_string(kMaxDegree));
  }

  RationalFn expr() {
    RationalFn acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'n' || c == 'z';
  }

  RationalFn term() {
    RationalFn acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFn d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
      check_degree(acc);
    }
  }

  RationalFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFn power() {
    RationalFn base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t p = pos_;
      auto e = read_decimal(text_, p);
      if (!e || boost::multiprecision::denominator(*e) != 1 || *e > kMaxDegree) fail("expected a small integer exponent");
      pos_ = p;
      RationalFn r = RationalFn::constant(1);
      for (int i = 0; i < static_cast<int>(boost::multiprecision::numerator(*e)); ++i) r = r * base;
      return r;
    }
    return base;
  }

  RationalFn primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'n') {
      if (!allow_n_) fail("variable n is not allowed here");
      ++pos_;
      return RationalFn(Poly2::n());
    }
    if (c == 'z') {
      ++pos_;
      return RationalFn(Poly2::z());
    }
    auto value = read_decimal(text_, pos_);
    if (!value) fail("expected a number, n, z or '('");
    return RationalFn::constant(*value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_offset_;
  bool allow_n_;
};

}  // namespace detail

/// Parses a rational expression in n and z (z only when allow_n is false).
inline RationalFn parse_rational_expression(std::string_view text, bool allow_n = true, int line = 1,
                                            int column_offset = 0) {
  return detail::ExpressionParser(text, line, column_offset, allow_n).parse();
}

/// Exact rational literal: integer, decimal, or "a/b".
inline BigRat parse_rational_literal(std::string_view text) {
  RationalFn r = parse_rational_expression(text, false);
  if (r.numerator().degree_z() > 0 || !r.is_polynomial()) {
    throw parse_error("expected a constant", 1, 1);
  }
  return r.numerator().constant_term();
}

/// Complex literal "a", "bi", "a+bi", "a-bi", "i", spaces allowed; a and b are
/// decimal (or a/b) literals. Returned as exact rational parts.
struct ComplexLiteral {
  BigRat re;
  BigRat im;

  bool is_real() const { return im == 0; }
  template <class Real>
  Complex<Real> to_complex() const {
    return {to_real<Real>(re), to_real<Real>(im)};
  }
};

inline ComplexLiteral parse_complex_literal(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw parse_error("empty complex literal", 1, 1);
  auto number = [&](const std::string& part, std::size_t column) -> BigRat {
    std::string body = part;
    if (body.empty() || body == "+") return 1;
    if (body == "-") return -1;
    try {
      return parse_rational_literal(body);
    } catch (const parse_error& e) {
      throw parse_error("bad number '" + part + "'", 1, static_cast<int>(column) + 1);
    }
  };
  if (s.back() != 'i') return {number(s, 0), 0};
  s.pop_back();
  // split at the last sign that is not the leading one and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0, number(s, 0)};
  return {number(s.substr(0, split), 0), number(s.substr(split), split)};
}

/// One "key: value" line of a recurrence or AFE file. Blank lines and '#'
/// comments are skipped by read_key_value_lines.
struct KeyValueLine {
  std::string key;
  std::string value;
  int line;
  int value_column;  // 0-based column where value starts
};

inline std::vector<KeyValueLine> read_key_value_lines(const std::string& content) {
  std::vector<KeyValueLine> out;
  std::istringstream in(content);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    // "z0=<point>: value" keys contain '=', so split on the last ':' before the value
    auto colon = line.find(':');
    if (line.compare(first, 3, "z0=") == 0) colon = line.find(':', first);
    if (colon == std::string::npos) throw parse_error("expected 'key: value'", line_no, static_cast<int>(first) + 1);
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::size_t vstart = line.find_first_not_of(" \t", colon + 1);
    if (vstart == std::string::npos) throw parse_error("missing value", line_no, static_cast<int>(colon) + 2);
    std::string value = line.substr(vstart);
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
    out.push_back({key, value, line_no, static_cast<int>(vstart)});
  }
  return out;
}

}  // namespace agf
