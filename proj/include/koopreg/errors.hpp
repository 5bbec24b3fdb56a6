#pragma once

#include <stdexcept>
#include <string>

namespace koopreg {

/// Expression or spec-file syntax error with 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Structural problem in a parsed system description (missing section,
/// dimension mismatch, non-skew exosystem matrix, ...).
class SpecError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector dimensions at a module boundary.
class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sylvester/Lyapunov solve rejected because the two spectra intersect.
class SingularPencilError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix required to be symmetric positive definite is not.
class NotPositiveDefiniteError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace koopreg
