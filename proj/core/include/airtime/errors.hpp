#pragma once

#include <stdexcept>
#include <string>

namespace airtime {

/// Argument outside the domain of a monotone map (L, F and their inverses).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The constraints admit no point that strictly improves on disagreement.
class InfeasibleProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural precondition on an input object was violated
/// (problem construction, contact-table events, scenario validation).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scenario documents that fail schema validation.
class SchemaError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace airtime
