#pragma once

#include <stdexcept>
#include <string>

namespace beq {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: violated type invariants, bad documents, bad flags.
struct ValidationError : Error {
  using Error::Error;
};

/// Domain-level failures: the computation is well-posed to reject these.
struct DomainError : Error {
  using Error::Error;
};

// --- Blaschke products ---

/// B'(0) vanishes; the critical-point pairing degenerates through the origin.
struct DegenerateOrigin : DomainError {
  using DomainError::DomainError;
};

/// The simultaneous root iteration did not converge within its budget.
struct RootFindFailure : DomainError {
  using DomainError::DomainError;
};

/// A critical-point root could not be classified as inside or outside the
/// unit circle. Boundary critical points are impossible, so this signals a
/// numerical failure.
struct ClassificationError : DomainError {
  using DomainError::DomainError;
};

/// Evaluation too close to a pole 1/conj(a_k).
struct PoleProximityError : DomainError {
  using DomainError::DomainError;
};

// --- Cayley transform ---

/// The inverse Cayley transform has its pole at u = -i.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

/// A measure atom coincides with the point sent to infinity.
struct AtomAtInfinity : DomainError {
  using DomainError::DomainError;
};

/// An atom at -i makes the energy-shift constant infinite.
struct InfiniteConstant : DomainError {
  using DomainError::DomainError;
};

// --- Energies ---

/// A configuration lies on a collision (proton at origin, coincident
/// electrons, electron on a proton or on its reflection).
struct ExceptionalConfigurationError : DomainError {
  using DomainError::DomainError;
};

/// A line configuration contains an infinity where a finite one is required.
struct InfinityPresent : DomainError {
  using DomainError::DomainError;
};

/// The measure lacks the symmetry the derivative identity requires.
struct SymmetryViolation : DomainError {
  using DomainError::DomainError;
};

// --- Interpolation ---

/// No admissible leading coefficient produced zeros inside the disk.
struct NoAdmissibleChi : DomainError {
  using DomainError::DomainError;
};

/// Every admissible interpolant had B'(0) = 0.
struct DegenerateOutput : DomainError {
  using DomainError::DomainError;
};

/// The traced curve point does not reproduce the interpolation input.
struct CurveMismatch : DomainError {
  using DomainError::DomainError;
};

}  // namespace beq
