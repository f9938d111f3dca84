#pragma once

#include <stdexcept>
#include <string>

namespace gd {

enum class ErrorKind {
  RingMismatch,
  DomainMismatch,
  DivisionNotExact,
  NotAPerfectSquare,
  MissingAssignment,
  NotSkewSymmetric,
  ShapeMismatch,
  IndexOutOfRange,
  GuardExceeded,
  ConsistencyFailure,
  InhomogeneousInput,
  MissingDegreeBound,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers branch on
/// the failure class without parsing messages.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gd
