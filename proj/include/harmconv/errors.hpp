#pragma once

#include <stdexcept>
#include <string>

namespace harmconv {

// Base type for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value that must lie strictly inside the unit disk does not.
struct NotInDisk : Error {
  using Error::Error;
};

// Evaluation point with |z| >= 1.
struct OutsideDisk : Error {
  using Error::Error;
};

// series_divide against a denominator whose constant term is (numerically) zero.
struct DivisorVanishesAtOrigin : Error {
  using Error::Error;
};

// Rotation factor whose modulus is not 1 within tolerance.
struct NotUnimodular : Error {
  using Error::Error;
};

// Dilatation value at the origin conflicts with the family parameters.
struct InconsistentDilatationAtOrigin : Error {
  using Error::Error;
};

// Convex combination weights that are negative or do not sum to one.
struct BadWeights : Error {
  using Error::Error;
};

// Generic parameter/domain violation (orders, indices, ranges).
struct OutOfRange : Error {
  using Error::Error;
};

// Cohn reduction step with |constant| and |leading| too close to compare.
struct DegenerateStep : Error {
  using Error::Error;
};

// Root finder failed to reach the residual target.
struct NoConvergence : Error {
  using Error::Error;
};

// A certificate was requested for a function with identically-zero derivative.
struct ConstantFunction : Error {
  using Error::Error;
};

// Input JSON does not match the expected schema; message names the field.
struct SchemaError : Error {
  using Error::Error;
};

// Scenario id not present in the registry.
struct UnknownScenario : Error {
  using Error::Error;
};

// Output file could not be written or moved into place.
struct IOError : Error {
  using Error::Error;
};

}  // namespace harmconv
