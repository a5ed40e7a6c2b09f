#pragma once

#include <stdexcept>
#include <string>

namespace hypermat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element or vector used with a hyperfield / ground set it does not belong to.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class InvalidSubgroup : public Error {
 public:
  using Error::Error;
};

class InvalidHyperfield : public Error {
 public:
  using Error::Error;
};

class InvalidCircuits : public Error {
 public:
  using Error::Error;
};

// Raised by minty_minimalize when (M1) or (M2) fails for the input pair.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

class NotAnHMatroid : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A search that a known structural result guarantees to succeed came back
// empty. Seeing one means either a bug or a window too small for the instance.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermat
