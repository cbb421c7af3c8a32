#pragma once

#include <stdexcept>
#include <string>

namespace cubicpm {

/// Caller violated an operation's precondition (wrong sizes, bad flags, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fixed-point iteration failed to stabilize.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The seed handed to the algebraic solver is not a prefix of any root branch.
class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The seed handed to the algebraic solver is too short to pin down a branch.
class NeedsLongerSeedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series that counts objects came out with a negative coefficient.
class NegativeCoefficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size or time budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubicpm
