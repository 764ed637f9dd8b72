#pragma once

// Fixed-step RK4 integration of the Hamiltonian systems, used as an
// independent oracle for the closed forms.
//
//   SO(3):  R' = R (p1 A2 + p2 sqrt(1 - a^2) A1)
//   S^3:    q' = q (p1 j + p2 sqrt(1 - a^2) i) / 2
//   S^2:    gamma' = gamma x omega,  p_vec' = p_vec x omega,
//           omega = p1 e2 + p2 sqrt(1 - a^2) e1
//   vertical part: p1' = p3 p2, p2' = -p3 p1, p3' = a^2 p1 p2

#include <vector>

#include "srgeo/sphere.hpp"

namespace srgeo {

struct IntegratorConfig {
  double step = 1e-4;
  int reorthonormalize_every = 100;
  /// Spacing of recorded states; 0 records only the start and the end.
  double record_interval = 0.0;

  /// Throws DomainError unless step > 0 and reorthonormalize_every >= 1.
  void validate() const;
};

struct So3State {
  double t = 0.0;
  Rotation R = Rotation::Identity();
  Covector p;
};

struct QuatState {
  double t = 0.0;
  UnitQuaternion q;
  Covector p;
};

struct SphereState {
  double t = 0.0;
  SpherePoint gamma;
  Covector p;
};

std::vector<So3State> integrate_so3(const Covector& p0, const SRParams& params, double t_end,
                                    const IntegratorConfig& cfg = {});
std::vector<QuatState> integrate_quat(const Covector& p0, const SRParams& params, double t_end,
                                      const IntegratorConfig& cfg = {});
std::vector<SphereState> integrate_sphere(const SpherePoint& gamma0, const Covector& p0,
                                          const SRParams& params, double t_end,
                                          const IntegratorConfig& cfg = {});

/// Right-hand side of the vertical subsystem.
Vec3 vertical_field(const Covector& p, const SRParams& params);
/// omega = (p2 sqrt(1 - a^2), p1, 0)
Vec3 angular_velocity(const Covector& p, const SRParams& params);
/// Hamiltonian (p1^2 + p2^2) / 2.
double hamiltonian(const Covector& p);

/// Gram-Schmidt on the columns.
Rotation reorthonormalize(const Rotation& R);

struct Deviation {
  double t = 0.0;
  double rotation = 0.0;
  double quaternion = 0.0;
  double covector = 0.0;
  /// Only filled when a sphere point was supplied.
  double sphere = 0.0;
};

/// Max-norm deviations between closed forms and RK4 at each requested time
/// (sorted ascending, non-negative).
std::vector<Deviation> compare_with_oracle(const Covector& p0, const SRParams& params,
                                           const std::vector<double>& times,
                                           const IntegratorConfig& cfg = {},
                                           const SpherePoint* gamma0 = nullptr);

}  // namespace srgeo
