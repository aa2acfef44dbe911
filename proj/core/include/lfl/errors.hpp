#pragma once

#include <stdexcept>
#include <string>

namespace lfl {

/// A mathematical precondition or computation failed (bad input, bound exceeded, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfl
