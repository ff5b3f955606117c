#pragma once

#include <stdexcept>
#include <string>

namespace avoid {

// Malformed input: duplicate entries, values outside [1, n], unparsable text.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that lies outside an operation's domain (e.g. a
// permutation that is not start-small handed to the bijection).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal consistency check failed. Unreachable on valid input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace avoid
