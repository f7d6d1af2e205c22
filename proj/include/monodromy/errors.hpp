#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

/// Root of the library's error hierarchy. The CLI maps subclasses to exit
/// codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dual graph or document violates one or more structural invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class NonIntegralMultiplicity : public Error {
 public:
  using Error::Error;
};

class NonPositiveMultiplicity : public Error {
 public:
  using Error::Error;
};

class PositiveGenusUnsupported : public Error {
 public:
  using Error::Error;
};

class ClosedStratum : public Error {
 public:
  using Error::Error;
};

class NotSeparated : public Error {
 public:
  using Error::Error;
};

class NonIntegralColumn : public Error {
 public:
  using Error::Error;
};

class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

class MissingFirstBlowupTag : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two independent computations failed.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

}  // namespace monodromy
