#pragma once

// Closed-form sub-Riemannian exponential map on SO(3) and its lift to S^3.
//
// With Euler angles phi1, phi2 read off the Lax vector and phi3 obtained by
// integrating phi3' = sqrt(M (1 - a^2)) / (1 - a^2 p1^2), a geodesic from the
// identity is
//
//   R_t = e^{-phi1(0) A3} e^{-phi2(0) A1} e^{phi3(t) A3} e^{phi2(t) A1} e^{phi1(t) A3}
//
// and its quaternion lift replaces each factor e^{phi A_i} by the half-angle
// quaternion. The lift is continuous in t: phi1 is unwrapped along the
// trajectory (it winds once per period in C2), phi2 stays in (0, pi).

#include <span>
#include <vector>

#include "srgeo/algebra.hpp"
#include "srgeo/pendulum.hpp"

namespace srgeo {

struct EulerPhi {
  double cos_phi1 = 1.0;
  double sin_phi1 = 0.0;
  double cos_phi2 = 1.0;
  double sin_phi2 = 0.0;
  /// Continuous phi1 along the trajectory.
  double phi1 = 0.0;
  /// In (0, pi).
  double phi2 = 0.0;
  /// Unwrapped, strictly increasing, phi3(0) = 0.
  double phi3 = 0.0;
};

struct GeodesicSample {
  double t = 0.0;
  Rotation R = Rotation::Identity();
  UnitQuaternion q;
  Covector p;
  EulerPhi phi;
};

/// Angle pairs of phi1, phi2 for a covector with conserved M.
EulerPhi euler_phi12(const Covector& p, double M, const SRParams& params);

/// phi3(t) from the region-wise closed forms.
double phi3(const EllipticData& ed, const SRParams& params, double t);

/// Right-hand side of the phi3 equation.
double phi3_rate(const Covector& p, double M, const SRParams& params);

/// A geodesic with its action-angle data and initial Euler factors cached.
class Geodesic {
 public:
  Geodesic(const Covector& p0, const SRParams& params);
  Geodesic(const EllipticData& ed, const SRParams& params);

  const SRParams& params() const { return params_; }
  const EllipticData& elliptic() const { return ed_; }
  const Covector& initial_covector() const { return p0_; }
  double M() const { return m_; }

  Covector covector(double t) const;
  double phi3(double t) const;
  EulerPhi euler(double t) const;
  Rotation rotation(double t) const;
  UnitQuaternion quaternion(double t, const UnitQuaternion& q_init = {}) const;
  GeodesicSample sample(double t) const;

 private:
  struct State {
    Covector p;
    EulerPhi phi;
  };
  State state(double t) const;
  double phi1_angle(const Covector& p, double amplitude) const;
  double elliptic_phase(double amplitude) const;

  SRParams params_;
  EllipticData ed_;
  Covector p0_;
  double m_ = 1.0;
  // C1/C2: third-kind characteristic, prefactor and Pi at t = 0.
  special::Characteristic pi_n_;
  double pi_scale_ = 0.0;
  double pi_at_zero_ = 0.0;
  double am_at_zero_ = 0.0;
  double c3_offset_ = 0.0;
  Rotation left_ = Rotation::Identity();
  UnitQuaternion left_q_;
};

/// Endpoint sample of the geodesic with initial covector p0 at time t >= 0.
GeodesicSample exp(const Covector& p0, const SRParams& params, double t);

/// Quaternion lift q(t) with q(0) = q_init.
UnitQuaternion exp_quat(const Covector& p0, const SRParams& params, double t,
                        const UnitQuaternion& q_init = {});

/// Samples on a non-decreasing grid of non-negative times.
std::vector<GeodesicSample> sample_geodesic(const Covector& p0, const SRParams& params,
                                            std::span<const double> t_grid);
std::vector<GeodesicSample> sample_geodesic(const Geodesic& geo, std::span<const double> t_grid);

}  // namespace srgeo
