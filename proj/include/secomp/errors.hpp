#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secomp {

/// Caller passed objects with incompatible shapes (a bug at the call site).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scalar argument outside its admissible range (probability outside [0,1],
/// malformed PMF, index out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation would exceed the configured enumeration budget. Carries the
/// number of terms the request would need so callers can raise the cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t required_terms, std::size_t cap)
      : std::runtime_error(what), required_terms(required_terms), cap(cap) {}
  std::size_t required_terms;
  std::size_t cap;
};

/// A stated hypothesis of the requested computation does not hold
/// (degradedness condition, nonempty code-length window, ...).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::string condition)
      : std::runtime_error(what), condition(std::move(condition)) {}
  std::string condition;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace secomp
