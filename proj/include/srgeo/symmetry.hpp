#pragma once

// Discrete symmetries eps^1..eps^7 of the exponential map and Maxwell-point
// detection through zeros of quaternion components.
//
// A symmetry acts on (t, p0) in the preimage and on R_t in the image so that
// eps_image(i, Exp(p0, t)) = Exp(eps_preimage(i, t, p0), t). A zero of q^c at
// s0 > 0 means R_s0 is a fixed point of one symmetry in the image:
//
//   q^0 = 0  <->  eps^6       q^1 = 0  <->  eps^1
//   q^2 = 0  <->  eps^5       q^3 = 0  <->  eps^2
//
// If eps^i does not also fix the covector, the partner geodesic is distinct
// and has the same endpoint, so R_s stops being optimal after s0.

#include <optional>
#include <vector>

#include "srgeo/exp_map.hpp"

namespace srgeo {

struct SymmetryId {
  int i = 1;
  /// Throws DomainError unless 1 <= i <= 7.
  explicit SymmetryId(int index);
};

/// tau + xi = a (t + theta0), tau - xi = a theta0.
struct TauXi {
  double tau = 0.0;
  double xi = 0.0;
};

TauXi tau_xi(const EllipticData& ed, const SRParams& params, double t);

/// Argument at which sn/cn are evaluated in the fixed-point tests: the
/// pendulum argument at time t/2 (tau in C1 and C3, tau/k in C2).
double tau_argument(const EllipticData& ed, const SRParams& params, double t);

Covector eps_preimage(SymmetryId id, double t, const Covector& p0, const SRParams& params);
Rotation eps_image(SymmetryId id, const Rotation& R);
/// Action on the quaternion lift consistent with eps_image.
UnitQuaternion eps_image(SymmetryId id, const UnitQuaternion& q);

/// Fixed-point test for C1..C3; throws DomainError for C4/C5.
bool is_fixed_preimage(SymmetryId id, const EllipticData& ed, const SRParams& params, double t);

/// Direct comparison eps_preimage(i, t, p0) == p0 within tol. Valid in every region.
bool fixes_covector(SymmetryId id, double t, const Covector& p0, const SRParams& params,
                    double tol = 1e-10);

/// Symmetry whose image fixed points are the zeros of q^component.
int symmetry_for_component(int component);

struct MaxwellHit {
  /// 1..4, the vanishing component is q^(condition - 1).
  int condition = 1;
  int symmetry = 6;
  double component_value = 0.0;
};

/// Conditions satisfied at the sample (zero within tol().zero * 10, provisos gated by
/// tol().fixed_gate). Empty for t <= 0.
std::vector<MaxwellHit> maxwell_condition(const GeodesicSample& sample, const EllipticData& ed,
                                          const SRParams& params);

/// Whether a zero of q^(condition-1) at time t yields a distinct partner geodesic.
bool maxwell_proviso(int condition, const EllipticData& ed, const SRParams& params, double t);

struct MaxwellEvent {
  double time = 0.0;
  int condition = 1;
  int symmetry = 6;
};

/// Earliest t in (0, t_max] where a condition holds with its proviso satisfied.
std::optional<MaxwellEvent> first_maxwell_time(const Covector& p0, const SRParams& params,
                                               double t_max);

/// Initial covector of the partner geodesic for an event.
Covector maxwell_partner(const MaxwellEvent& ev, const Covector& p0, const SRParams& params);

}  // namespace srgeo
