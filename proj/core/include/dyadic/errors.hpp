#pragma once

#include <stdexcept>

namespace dyadic {

/// Base class of all toolkit exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// 64-bit dyadic arithmetic left the representable range.
class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

/// A configured depth / size budget was exceeded.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// The difference subspace is not invariant (mask violates the sum rule).
class InvarianceViolation : public Error {
public:
  using Error::Error;
};

class NotColumnStochastic : public Error {
public:
  using Error::Error;
};

/// Eigenvalue-1 eigenspace of T0 is not one-dimensional.
class AmbiguousNormalization : public Error {
public:
  using Error::Error;
};

/// Continuity of the refinable function could not be certified (JSR bound >= 1).
class ContinuityNotCertified : public Error {
public:
  using Error::Error;
};

class NoContractiveFixedPoint : public Error {
public:
  using Error::Error;
};

/// Cascade probe did not certify convergence of the scheme.
class NonConvergentScheme : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace dyadic
