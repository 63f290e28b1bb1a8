#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpart {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrime : public Error {
 public:
  explicit NonPrime(unsigned p) : Error("not a prime: " + std::to_string(p)) {}
};

class ReducibleModulus : public Error {
 public:
  ReducibleModulus() : Error("modulus is not a monic irreducible polynomial of the requested degree") {}
};

class UnsupportedSize : public Error {
 public:
  UnsupportedSize(unsigned p, unsigned e)
      : Error("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) + ")") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live in different fields") {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t budget)
      : Error("enumeration of " + std::to_string(requested) + " items exceeds budget " + std::to_string(budget)) {}
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

class NonIntegerResult : public Error {
 public:
  NonIntegerResult() : Error("division by |C| is not exact; input distribution is inconsistent") {}
};

class EmptyCode : public Error {
 public:
  EmptyCode() : Error("operation undefined on the zero code") {}
};

class NonMonotone : public Error {
 public:
  NonMonotone() : Error("Ferrers column heights must be nonnegative and nondecreasing") {}
};

class InexactDivision : public Error {
 public:
  InexactDivision() : Error("Laurent division left a nonzero remainder") {}
};

/// Raised when an internal consistency check fails (indicates a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpart
