#pragma once

#include <stdexcept>
#include <string>

namespace agf {

/// Argument outside the domain of a function (e.g. log at zero).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation landed on a pole of a meromorphic function.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A recurrence coefficient has a pole, or the leading coefficient vanishes,
/// at step n. `which` is the shift k of the offending coefficient.
class coefficient_pole : public pole_error {
 public:
  coefficient_pole(long n, int which)
      : pole_error("coefficient pole at n=" + std::to_string(n) +
                   " (coefficient of u_{n+" + std::to_string(which) + "})"),
        n_(n),
        which_(which) {}

  long n() const noexcept { return n_; }
  int which() const noexcept { return which_; }

 private:
  long n_;
  int which_;
};

class non_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations of the same exact quantity disagreed.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace agf
