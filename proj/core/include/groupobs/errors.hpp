#pragma once

#include <stdexcept>
#include <string>

namespace groupobs {

// Malformed or out-of-range arguments and input data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A metric is mathematically undefined for the given arguments
// (e.g. a local metric with every node compromised).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation would exceed its configured work budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace groupobs
