#pragma once

#include <stdexcept>
#include <string>

namespace cherpoi {

// Bad arguments: empty partitions, size mismatches, mixed variable sets.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A computation would exceed the configured size bounds.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator factor has no geometric-series expansion in the requested direction.
class ExpansionDirectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact computation produced something its own invariants rule out.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, long first_uncertified_degree)
      : std::runtime_error(what), first_uncertified_degree_(first_uncertified_degree) {}

  long first_uncertified_degree() const noexcept { return first_uncertified_degree_; }

 private:
  long first_uncertified_degree_;
};

class InvalidSplitting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cherpoi
