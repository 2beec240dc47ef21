#pragma once

#include <stdexcept>
#include <string>

namespace ocrlm {

/// Bad input, bad configuration, missing files. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric failure (NaN, divergence) or other runtime fault. Exit code 2.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ocrlm
