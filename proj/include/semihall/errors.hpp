#pragma once

#include <stdexcept>
#include <string>

namespace semihall {

/// Two coefficients from different Q(sqrt q) fields were combined.
class ContextError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graded computation reached past the configured truncation bound.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing configuration (bad quiver file, unsupported q, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semihall
