#pragma once

#include <stdexcept>
#include <string>

namespace schelling {

// Raised when an argument lies outside the mathematical domain of an operation
// (out-of-range cell, odd population for a perfect matching, zero variance...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Internal state no longer satisfies its invariants. Never expected in a correct build.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schelling
