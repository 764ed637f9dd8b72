#pragma once

#include <stdexcept>
#include <string>

namespace srgeo {

/// Argument outside the domain of a formula (modulus, characteristic, a, t < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Covector sits within tolerance of two pendulum regions at once.
class RegionBoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Initial covector violates <p_vec, gamma0> = 0 for an almost-Riemannian geodesic.
class TransversalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A proven invariant failed numerically (orthogonality, unit norm, ...).
/// Never repaired silently.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srgeo
