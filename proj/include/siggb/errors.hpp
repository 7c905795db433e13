#ifndef SIGGB_ERRORS_HPP
#define SIGGB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siggb {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands live in rings (or modules) of different shapes.
class DimensionError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

// mono_div with a monomial that does not divide.
class DivisibilityError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class EmptyPolynomialError : public Error {
public:
  using Error::Error;
};

class NotPrimeError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

// A serial that names no element of the basis.
class LookupError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class CapExceededError : public Error {
public:
  using Error::Error;
};

// The standard-representation search refused an instance it cannot decide.
class SizeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  enum class Kind { Syntax, UnknownVariable, NotPrime, DuplicateSection };

  ParseError(Kind kind, std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

private:
  Kind kind_;
  std::size_t line_;
};

} // namespace siggb

#endif
