#pragma once

#include <stdexcept>
#include <string>

namespace kcrystal {

// Base of every error thrown by the library. The CLI maps each subclass to
// an exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: malformed values, violated preconditions.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string location = {})
      : Error(what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// An internal invariant failed (e.g. two boundary boxes with equal d-value).
// Unreachable for valid parameters.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A GL_n class member is not strictly dominant.
class DegenerateClass : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace kcrystal
