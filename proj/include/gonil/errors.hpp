#pragma once

#include <stdexcept>
#include <string>

namespace gonil {

/// Input that does not describe a valid object (bad indices, Jacobi failure,
/// degenerate form, non-nilpotent algebra, malformed file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural check was run and came out negative.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gonil
