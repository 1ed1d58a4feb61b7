#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vantage {

/// Two inputs that must share a dimension do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                              std::to_string(actual)) {}
};

/// An operation's precondition was violated (bad parameter ranges, malformed configuration).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square root of an interval lying entirely below zero, or division by an interval containing zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The vantage multiset does not distinguish candidates `first` and `second`.
class TieError : public std::runtime_error {
 public:
  TieError(std::size_t first, std::size_t second)
      : std::runtime_error("tie between candidates " + std::to_string(first) + " and " +
                           std::to_string(second)),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A certified comparison could not be decided below the precision cap.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or complexity guard rail was exceeded.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace vantage
