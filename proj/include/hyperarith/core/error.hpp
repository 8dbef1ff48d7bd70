#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperarith {

/// Base of every error raised by the library. Input-level problems (bad
/// files, unsupported labels) and contract violations share this root so the
/// CLI can map all of them onto exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different number fields") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("matrix is not symmetric") {}
};

class DegenerateRestriction : public Error {
 public:
  DegenerateRestriction()
      : Error("quadratic form is degenerate on the requested subspace") {}
};

class DegenerateForm : public Error {
 public:
  DegenerateForm() : Error("quadratic form is degenerate") {}
};

class NotAdmissible : public Error {
 public:
  NotAdmissible() : Error("quadratic space is not admissible") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedLabel : public Error {
 public:
  using Error::Error;
};

class NotHyperbolic : public Error {
 public:
  NotHyperbolic() : Error("Coxeter diagram is not hyperbolic") {}
};

class RankTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedComplex : public Error {
 public:
  using Error::Error;
};

class XiInsideH : public Error {
 public:
  XiInsideH() : Error("transversal vector lies in the cutting hyperplane") {}
};

class NoBeltAvailable : public Error {
 public:
  NoBeltAvailable() : Error("no unknotted belt component left to glue along") {}
};

}  // namespace hyperarith
