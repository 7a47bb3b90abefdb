#pragma once

#include <stdexcept>
#include <string>

namespace tempsteer {

// Base class for every error this library raises intentionally.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class NonHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotPsd : public Error {
 public:
  using Error::Error;
};

class InvalidAxis : public Error {
 public:
  using Error::Error;
};

class InvalidEta : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotMaximallyMixed : public Error {
 public:
  using Error::Error;
};

class ZeroProbability : public Error {
 public:
  using Error::Error;
};

class IncompleteResponse : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class BadShape : public Error {
 public:
  using Error::Error;
};

class SeedRequired : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A constructed value failed its own invariant (bad trace, completeness, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tempsteer
