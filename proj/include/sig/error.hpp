#pragma once

#include <stdexcept>
#include <string>

namespace sig {

/// Raised when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a request is well-formed but exceeds a computational bound
/// (e.g. an exhaustive enumeration that would be too large).
class InfeasibleProblem : public std::runtime_error {
 public:
  explicit InfeasibleProblem(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sig
