#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbk {

// Malformed input file; carries the 1-based line number of the offending line
// (0 when the error concerns the whole input, e.g. an empty file).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A request exceeds a caller-configurable work budget (e.g. the O(kN^2) oracle cap).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbk
