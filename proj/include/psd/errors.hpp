#pragma once

#include <stdexcept>
#include <string>

namespace psd {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check fails. Reaching this means the
/// arithmetic is wrong somewhere, never that the input was bad.
class ArithmeticBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psd
