#ifndef DQD_ERRORS_HPP
#define DQD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dqd {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid construction with x_min >= x_max or too few points.
struct InvalidBoundsError : Error {
  using Error::Error;
};

/// Two wavefunctions living on different grids were combined.
struct GridMismatchError : Error {
  using Error::Error;
};

/// A field's sample count does not match the time mesh it is used with.
struct MeshMismatchError : Error {
  using Error::Error;
};

/// A state with (numerically) zero norm cannot be normalized.
struct ZeroNormError : Error {
  using Error::Error;
};

/// Eigensolver failed or produced residuals above tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Nonpositive or otherwise unusable time step.
struct StepSizeError : Error {
  using Error::Error;
};

/// Scalar argument outside its admissible range.
struct DomainError : Error {
  using Error::Error;
};

/// The control-equation overlap Im<chi|mu|psi> vanished identically;
/// the fixed-fluence multiplier is undefined.
struct ZeroOverlapError : Error {
  using Error::Error;
};

/// Trajectories passed to the field update do not share mesh/resolution.
struct TrajectoryMismatchError : Error {
  using Error::Error;
};

/// Bad configuration file or override (unknown key, unparsable value, ...).
struct ConfigError : Error {
  using Error::Error;
};

} // namespace dqd

#endif
