#pragma once

#include <stdexcept>
#include <string>

namespace edgecol {

// Thrown when a caller breaks an operation's precondition (bad vertex id,
// assigning a color already present, overlapping sides, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a mathematical hypothesis an algorithm relies on does not hold
// for the given input (Dirac degree bound, density requirement, ...).
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgecol
