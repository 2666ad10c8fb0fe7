#pragma once

#include <stdexcept>
#include <string>

namespace dieudonne {

/// Raised when an input fails a structural axiom (BT1, polarization, word form).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a requested invariant profile cannot be realized.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dieudonne
