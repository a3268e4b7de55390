#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbor {

/// Malformed textual input (tree strings, rationals, polynomials).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of an operation was violated by its arguments.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree produced different results.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arbor
