#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pmalcev {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotAntisymmetric : Error {
  using Error::Error;
};

struct NotMalcev : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NotSolution : Error {
  using Error::Error;
};

struct NotAnOOperator : Error {
  using Error::Error;
};

struct NotNijenhuis : Error {
  using Error::Error;
};

struct NotNijenhuisPair : Error {
  using Error::Error;
};

struct NotCompatible : Error {
  using Error::Error;
};

struct NotONStructure : Error {
  using Error::Error;
};

struct NotPseudoHessian : Error {
  using Error::Error;
};

struct BimoduleMismatch : Error {
  using Error::Error;
};

struct TooFewSamples : Error {
  using Error::Error;
};

struct UnknownCommand : Error {
  using Error::Error;
};

/// Raised on malformed input text; carries a 1-based position when the
/// underlying syntax error exposes one.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}

  std::optional<std::size_t> line;
  std::optional<std::size_t> column;
};

struct DimensionError : Error {
  using Error::Error;
};

}  // namespace pmalcev
