#pragma once

#include <stdexcept>
#include <string>

namespace remanlca {

/// Malformed or unreadable input document. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed but breaks a domain invariant. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation failed (missing factor, unit mismatch, bad parameter). Exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnresolvedFactorError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UnitMismatchError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace remanlca
