#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace occred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text or formula structure could not be accepted.
class ParseError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BindingError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyClauseError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A construction could not be certified.
class CertificationError : public Error {
 public:
  using Error::Error;
};

class RoutingVerificationFailed : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class TooLargeForExhaustive : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IncompleteAssignment : public Error {
 public:
  using Error::Error;
};

class OccurrenceBoundViolated : public Error {
 public:
  using Error::Error;
};

class TraceMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace occred
