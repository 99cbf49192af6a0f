#pragma once

#include <stdexcept>
#include <string>

namespace weil {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1 with a structured error report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed an explicit size cap. Never silently truncated.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace weil
