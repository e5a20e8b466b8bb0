// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace csb {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter validation; what() names the offending field.
class NonPositiveB : public Error {
 public:
  using Error::Error;
};
class OutOfRangeM : public Error {
 public:
  using Error::Error;
};
class NonPositiveCount : public Error {
 public:
  using Error::Error;
};

/// Eigeniteration exceeded its sweep budget (pathological input).
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// A closed-form helper was called with the wrong number of battery cells.
class WrongCellCount : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested outside the regime where it applies.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

/// The charging objective is identically zero (A = 0 or m = 0).
class NoChargingPossible : public Error {
 public:
  using Error::Error;
};

/// k(1-k) = 0: the non-TC predictor diverges at m = 0 or m = N_c.
class DegenerateFilling : public Error {
 public:
  using Error::Error;
};

/// A checked theorem failed; what() carries the counterexample.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

/// Request exceeds the dense-oracle size cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace csb
