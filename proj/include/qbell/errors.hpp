#pragma once

#include <stdexcept>
#include <string>

namespace qbell {

// Requested tensor dimension exceeds the configured qubit capacity.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Eigensolver failure or other irrecoverable numerical breakdown.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Probability set cannot come from a pure two-qubit state (cosine
// reconstruction outside [-1, 1] beyond slack, or worse).
class InconsistentProbabilityError : public std::runtime_error {
 public:
  explicit InconsistentProbabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qbell
