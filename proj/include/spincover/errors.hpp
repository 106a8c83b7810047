#pragma once

#include <stdexcept>
#include <string>

namespace spincover {

/// Operand dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument is well-shaped but outside the operation's domain
/// (non-isometry, non-isotropic vector, form not in the expected set, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A full enumeration was requested above the configured dimension bound.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Seeing one of these means a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spincover
