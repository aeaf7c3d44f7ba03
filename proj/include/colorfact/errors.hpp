#pragma once

#include <stdexcept>
#include <string>

namespace colorfact {

/// Argument outside the mathematical domain of an operation (n = 0, l = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller asked for something the API does not support.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource guard (list size, sieve limit, ...) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed, e.g. a division that must be exact left a
/// remainder. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace colorfact
