#pragma once

#include <stdexcept>
#include <string>

namespace gridcache {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A document (placement file, CLI value) could not be parsed.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The request is well formed but has no solution on the given grid
/// (non-divisible subdivision factor, too many caches for the axes...).
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was broken. Seeing one of these is a bug.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gridcache
