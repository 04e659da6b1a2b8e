#pragma once

#include <stdexcept>
#include <string>

namespace pdfl {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad indices, self-loops, parse failures, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// A matrix exceeded the size cap of the routine it was passed to.
struct CapacityError : Error {
  using Error::Error;
};

/// The eigensolver failed to converge.
struct SolverError : Error {
  using Error::Error;
};

/// A --verify cross-check between the spectral pipeline and the exact
/// arithmetic oracle found a mismatch.
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace pdfl
