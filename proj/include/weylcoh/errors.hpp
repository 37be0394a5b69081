#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylcoh {

/// Malformed or unsupported user input. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in an expression, with the byte offset where it was detected.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An explicit graded model violates the Weyl relations on its interior.
class ModelInvalid : public InputError {
 public:
  using InputError::InputError;
};

/// An internal identity failed (a broken resolution, a negative homology
/// dimension, a Bernstein violation). The CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weylcoh
