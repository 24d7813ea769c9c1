#pragma once

#include <stdexcept>
#include <string>

namespace pk {

// Root of every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (bad token, bad grammar).
class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyExpr : public ParseError {
 public:
  using ParseError::ParseError;
};

// Well-formed text describing an invalid object (chord used three times, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operation applied to a chord or move that does not admit it.
class InvalidOperation : public Error {
 public:
  using Error::Error;
};

class NotAPrecrossing : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class NotClassical : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class UnknownChord : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class InapplicableMove : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class BudgetInvalid : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class MultiComponent : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class HasPrecrossings : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

class NotRealizable : public InvalidOperation {
 public:
  using InvalidOperation::InvalidOperation;
};

}  // namespace pk
