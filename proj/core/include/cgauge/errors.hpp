#pragma once

#include <stdexcept>
#include <string>

namespace cgauge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// tensor_core
class DimensionError : public Error {
 public:
  using Error::Error;
};
class NormalizationError : public Error {
 public:
  using Error::Error;
};
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};
class KSignError : public Error {
 public:
  using Error::Error;
};

// quadrature
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// constants_lab
class CodimensionError : public Error {
 public:
  using Error::Error;
};
class DegenerateRegion : public Error {
 public:
  using Error::Error;
};
class ConstraintError : public Error {
 public:
  using Error::Error;
};
class EmptyDomain : public Error {
 public:
  using Error::Error;
};
class ConditionError : public Error {
 public:
  using Error::Error;
};
class PatternError : public Error {
 public:
  using Error::Error;
};
class SignError : public Error {
 public:
  using Error::Error;
};

// submanifold_geometry / morse_counter
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cgauge
