#pragma once

#include <stdexcept>
#include <string>

namespace nbj {

/// An evaluation was requested outside the mathematical domain of the
/// operation (e.g. a Hahn polynomial with vanishing denominator).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form coefficient hit a removable singularity; callers are
/// expected to fall back to the Krein-parameter route.
class SingularCoefficientError : public DomainError {
 public:
  explicit SingularCoefficientError(const std::string& what) : DomainError(what) {}
};

/// A configurable size guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant that should be unreachable was violated.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nbj
