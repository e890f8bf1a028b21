#pragma once

#include <stdexcept>
#include <string>

namespace arr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { syntax, nonlinear, duplicate, zero_form, unknown_variable };

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : Error(std::string("parse error (") + to_string(kind) + "): " + what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A graded piece or matrix exceeds the configured ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The arrangement does not satisfy the hypothesis a formula needs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis the library cannot verify was not asserted by the caller.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arr
