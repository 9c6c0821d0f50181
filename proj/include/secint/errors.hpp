#pragma once

#include <stdexcept>
#include <string>

namespace secint {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input: a value outside its type's domain.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// An operation's precondition does not hold for otherwise valid values.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

class ResidualNotEffective : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class NotApplicable : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class NonHomogeneous : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class DegreeMismatch : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class SearchSpaceTooLarge : public Error {
  public:
    using Error::Error;
};

// A result violated an invariant that the mathematics guarantees; always a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

class InternalNonInteger : public InternalError {
  public:
    using InternalError::InternalError;
};

} // namespace secint
