#pragma once

#include <stdexcept>
#include <string>

namespace geophase {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonHermitianError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class UnphysicalStateError : public Error {
public:
  using Error::Error;
};

class BranchAmbiguityError : public Error {
public:
  using Error::Error;
};

class NoConvergenceError : public Error {
public:
  using Error::Error;
};

class DegenerateStateError : public Error {
public:
  using Error::Error;
};

class NotSimultaneouslyDiagonalizableError : public Error {
public:
  using Error::Error;
};

class UnsupportedBathError : public Error {
public:
  using Error::Error;
};

class ZeroGapError : public Error {
public:
  using Error::Error;
};

class RegimeViolationError : public Error {
public:
  using Error::Error;
};

class QuadratureDivergenceError : public Error {
public:
  using Error::Error;
};

class TruncationNotConvergedError : public Error {
public:
  using Error::Error;
};

class DimensionOverflowError : public Error {
public:
  using Error::Error;
};

} // namespace geophase
