#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace falg {

// Raised when a configurable resource cap is hit (forest enumeration cap,
// monomial basis cap, recursion node budget).  The message names the cap.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Input-text errors; line numbers are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A dimension vector fed to the recovery algorithm is inconsistent with the
// stated t: bad top degree, negative residual, impossible forest size.
class recovery_error : public std::runtime_error {
 public:
  recovery_error(const std::string& what, long degree)
      : std::runtime_error(what + " (degree " + std::to_string(degree) + ")"),
        degree_(degree) {}
  long degree() const { return degree_; }

 private:
  long degree_;
};

}  // namespace falg
