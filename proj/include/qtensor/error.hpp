#pragma once

#include <stdexcept>
#include <string>

namespace qtensor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// q0 in {0, 1, -1}, or a denominator vanishing at q0.
class InvalidSpecialization : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition (index out of range,
/// malformed partition, shape mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Psi_j^{+(k)} requested for a weight with alpha_{j+k}^vee(lambda) = 0.
class PsiUndefined : public Error {
 public:
  using Error::Error;
};

/// Phi_m requested for a weight where row m is not addable.
class NotAddable : public Error {
 public:
  using Error::Error;
};

/// weight_of() on a vector whose support mixes several weights.
class MixedWeight : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

/// A verification identity failed. Raised only when exact arithmetic
/// contradicts a theorem, so it always indicates a bug.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qtensor
