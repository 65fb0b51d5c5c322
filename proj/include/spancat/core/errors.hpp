#pragma once

#include <stdexcept>
#include <string>

namespace spancat {

/// A precondition of an operation was violated by its arguments
/// (endpoint mismatch, wrong morphism class, malformed input).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance operation produced a result that contradicts the axioms
/// it is supposed to satisfy. Always indicates a bug in the instance.
class InstanceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace spancat
