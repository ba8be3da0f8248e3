#pragma once

#include <stdexcept>
#include <string>

namespace zshadow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on length or modulus.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (zero modulus, Im tau <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class NotTypeIError : public Error {
 public:
  using Error::Error;
};

class InvalidShadowVector : public Error {
 public:
  using Error::Error;
};

class ImageShapeError : public Error {
 public:
  using Error::Error;
};

class TableViolation : public Error {
 public:
  using Error::Error;
};

class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class ConstructionIntegrityError : public Error {
 public:
  using Error::Error;
};

/// No self-dual code exists for the requested parameters, or no recipe covers them.
class ImpossibleCaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zshadow
