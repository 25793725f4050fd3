#pragma once

#include <stdexcept>
#include <string>

namespace ringsynth {

// Input outside the ring an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class NotUnitaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsupported ring, gate set mismatch, det != 1 for ancilla-free requests.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken lemma precondition or internal invariant.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ringsynth
