// Error taxonomy shared by all modules.
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace atto {

/// Scientific-notation formatting for residuals in error messages.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

/// Base class of every failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A domain-type invariant does not hold (zero on/outside the disk, ...).
struct InvariantViolation : Error {
  using Error::Error;
};

/// Companion-matrix eigensolve or root polish did not converge.
struct RootFindingFailure : Error {
  using Error::Error;
};

/// Adaptive circle quadrature exceeded its node cap.
struct QuadratureNotConverged : Error {
  using Error::Error;
};

/// Two model-space elements over different bases were combined.
struct BasisMismatch : Error {
  using Error::Error;
};

/// A denominator root lies on or inside the closed unit disk.
struct PoleOnOrInsideDisk : Error {
  using Error::Error;
};

/// Fourier truncation order too small for the requested accuracy.
struct TruncationInsufficient : Error {
  using Error::Error;
};

/// Analytic/coanalytic re-split left a residue on the circle.
struct SplitFailure : Error {
  using Error::Error;
};

/// Malformed or invalid CLI/config input.  Carries a field path.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace atto
