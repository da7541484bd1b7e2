#pragma once

#include <stdexcept>
#include <string>

namespace nilfilt {

// Input that violates a documented invariant (bad Cayley table, malformed
// group file, non-TC group passed to a TC-only routine, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A hard size limit was hit. Counts are never truncated or approximated.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fired when an internal consistency check fails (e.g. a boundary map that
// does not square to zero). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nilfilt

namespace nilfilt {

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilfilt
