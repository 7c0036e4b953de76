#pragma once

#include <stdexcept>
#include <string>

namespace pointint {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- configuration validation ---------------------------------------------

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class EmptyConfiguration : public ValidationFailure {
 public:
  EmptyConfiguration() : ValidationFailure("configuration has no centers") {}
};

class NonFiniteEntry : public ValidationFailure {
 public:
  using ValidationFailure::ValidationFailure;
};

class DuplicateCenters : public ValidationFailure {
 public:
  using ValidationFailure::ValidationFailure;
};

// --- registry and persistence ----------------------------------------------

class UnknownName : public Error {
 public:
  using Error::Error;
};

class BadParameterCount : public Error {
 public:
  using Error::Error;
};

class IOFailure : public Error {
 public:
  using Error::Error;
};

class ParseFailure : public Error {
 public:
  using Error::Error;
};

// --- kernel evaluation -------------------------------------------------------

class CoincidentPoints : public Error {
 public:
  CoincidentPoints() : Error("free Green function evaluated at coincident points") {}
};

class CoincidentWithCenter : public Error {
 public:
  CoincidentWithCenter() : Error("evaluation point coincides with an interaction center") {}
};

// --- spectrum ---------------------------------------------------------------

class BranchNotBracketed : public Error {
 public:
  using Error::Error;
};

class NotAZeroMode : public Error {
 public:
  using Error::Error;
};

// --- Laurent / inversion -----------------------------------------------------

class APlusPSingular : public Error {
 public:
  using Error::Error;
};

class BSingular : public Error {
 public:
  using Error::Error;
};

class RestrictedBlockSingular : public Error {
 public:
  using Error::Error;
};

class SingularOnContour : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class GammaSingular : public Error {
 public:
  using Error::Error;
};

// --- quadratic form / search -------------------------------------------------

class SumNotZero : public Error {
 public:
  using Error::Error;
};

class InconsistentZeroComponent : public Error {
 public:
  using Error::Error;
};

}  // namespace pointint
