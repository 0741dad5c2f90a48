#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input instance (bad JSON, duplicates, missing axis generators, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A point was ranked against a slice that does not contain it.
class OutOfDomainError : public Error {
  public:
    using Error::Error;
};

/// A simplex slice exceeded the configured size cap.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// The instance lies outside the supported families (neither smooth nor one-singular).
class UnsupportedInstanceError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its contract.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A proven relation (bound, equality, characterization) failed on a concrete instance.
/// Either the implementation is wrong or the instance falsifies a proven bound.
class BoundViolation : public Error {
  public:
    using Error::Error;
};

/// Two independent internal routes disagree.
class InternalError : public Error {
  public:
    using Error::Error;
};

} // namespace toric
