#pragma once

#include <stdexcept>
#include <string>

namespace trineq {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar or spectral argument lies outside the domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A strictly positive definite matrix was required (negative powers,
// inverse square roots) but the smallest eigenvalue is within tolerance of 0.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class HermiticityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// The hypothesis of a conditional inequality (e.g. a Loewner chain) does not
// hold on the supplied inputs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An identity that holds in exact arithmetic failed by more than roundoff.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_dimension_mismatch(const char* where, long lhs, long rhs);

}  // namespace trineq
