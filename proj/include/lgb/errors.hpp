#pragma once

#include <stdexcept>
#include <string>

namespace lgb {

/// Base class for all engine errors. Each subclass maps to one failure
/// category surfaced by the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched fields, empty input, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Leading data requested for the zero polynomial.
class UndefinedLeading : public Error {
 public:
  UndefinedLeading() : Error("leading data of the zero polynomial is undefined") {}
};

/// Operation requires a simplicial unimodular cone.
class UnsupportedCone : public Error {
 public:
  using Error::Error;
};

/// A bounded lattice search could not certify completeness.
class IncompleteSearch : public Error {
 public:
  using Error::Error;
};

/// A resource guard (basis size, search budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class DegeneratePolytope : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file or expression. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lgb
