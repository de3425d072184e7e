#pragma once

#include <stdexcept>
#include <string>

namespace ncnodal {

/// Syntax error in one of the text formats. Carries 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int col)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", col " + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace ncnodal
