#pragma once

#include <stdexcept>
#include <string>

namespace gaugelab {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two objects that must live on the same grid do not.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Polynomial operands of different degree where equal degree is required.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation received a nonlinearity variant it does not support.
class WrongVariant : public Error {
 public:
  using Error::Error;
};

/// Newton iteration hit its iteration cap or exhausted step damping.
class NewtonDiverged : public Error {
 public:
  using Error::Error;
};

/// Linear solve breakdown: factorization failure or a non-physical blowup
/// of the correction, the discrete sign that 0 sits in the spectrum of the
/// linearized operator.
class SingularJacobian : public Error {
 public:
  using Error::Error;
};

/// Inverse power iteration failed to settle within its iteration cap.
class PowerIterationStalled : public Error {
 public:
  using Error::Error;
};

/// Divided-difference step so small that round-off dominates the estimate.
class StepTooSmall : public Error {
 public:
  using Error::Error;
};

/// A quantity that must satisfy a structural invariant (e.g. zero Cauchy
/// data of a gauge function) violates it beyond tolerance.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A branch decision (sign / phase) cannot be made from the available data.
class BranchAmbiguous : public Error {
 public:
  using Error::Error;
};

/// Phase unwrapping reached a node along two paths with inconsistent values.
class UnwrapConflict : public Error {
 public:
  using Error::Error;
};

/// Regularized linear system is numerically rank deficient.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Outer optimization loop stopped making progress.
class Diverged : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue check failed along an iteration: the linearized forward
/// problem is no longer safely solvable.
class IllPosed : public Error {
 public:
  using Error::Error;
};

/// A nodewise division pivot dropped below its admissibility threshold.
class DegeneratePivot : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaugelab
