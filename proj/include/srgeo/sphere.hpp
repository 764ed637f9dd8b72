#pragma once

// Almost-Riemannian geodesics on S^2 obtained by projecting sub-Riemannian
// geodesics on SO(3): gamma_t = R_t^{-1} gamma0.
//
// "p_vec" below always means the Lax vector (p2, p1 sqrt(1 - a^2), p3), not
// the covector (p1, p2, p3). The projection is an almost-Riemannian geodesic
// iff <p_vec(0), gamma0> = 0; both vectors are carried by the same rotation,
// so the product stays zero for all t.
//
// The singular set is the equator z = 0.

#include <functional>
#include <string_view>
#include <vector>

#include "srgeo/exp_map.hpp"

namespace srgeo {

inline constexpr double kUnitSphereTolerance = 1e-12;
inline constexpr double kTransversalityTolerance = 1e-12;

struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  /// Throws DomainError if | |v| - 1 | > 1e-12.
  static SpherePoint from_vector(const Vec3& v);
  Vec3 as_vector() const { return {x, y, z}; }
  double norm() const { return as_vector().norm(); }
};

/// <p_vec, gamma0>
double transversality_defect(const Covector& p0, const SpherePoint& gamma0,
                             const SRParams& params);

/// True iff |z| <= 1e-12.
bool singular_set(const SpherePoint& p);

class ARGeodesic {
 public:
  /// Throws TransversalityError if |<p_vec, gamma0>| > 1e-12.
  ARGeodesic(const SpherePoint& gamma0, const Covector& p0, const SRParams& params);

  const SpherePoint& gamma0() const { return gamma0_; }
  const Covector& p0() const { return p0_; }
  const EllipticData& elliptic() const { return geo_.elliptic(); }
  const Geodesic& geodesic() const { return geo_; }

  SpherePoint at(double t) const;

 private:
  SpherePoint gamma0_;
  Covector p0_;
  Geodesic geo_;
};

SpherePoint project(const Covector& p0, const SRParams& params, const SpherePoint& gamma0,
                    double t);

/// Initial covectors satisfying transversality at gamma0.
///
/// Psi chart (z0 != 0): p = (cos psi, -sin psi, p3(psi)) with
///   p3 = (x0 sin psi - sqrt(1 - a^2) y0 cos psi) / z0.
/// P3 chart (z0 = 0): psi is pinned to atan2(sqrt(1 - a^2) y0, x0) or that plus pi,
///   and p3 is free.
struct TransversalFamily {
  enum class Chart { Psi, P3 };

  Chart chart = Chart::Psi;
  SpherePoint gamma0;
  double b = 1.0;
  double psi_star = 0.0;

  /// Psi chart: s = psi, branch ignored. P3 chart: s = p3, branch 0 or 1 picks psi_star or psi_star + pi.
  Covector at(double s, int branch = 0) const;
};

TransversalFamily transversal_family(const SpherePoint& gamma0, const SRParams& params);

/// Initial-point sets that admit a symmetry of the exponential map.
enum class InitialSet { XPole, YPole, ZPole, XZero, YZero, ZZero };

std::string_view to_string(InitialSet s);
bool in_initial_set(InitialSet s, const SpherePoint& gamma0);

/// Quantities a residual coefficient may depend on.
struct ResidualState {
  double t = 0.0;
  Covector p;
  Covector p_init;
  double M = 1.0;
  double phi3 = 0.0;
  double b = 1.0;
  SpherePoint gamma0;
};

/// A Maxwell-time equation B_s(t) sin phi3(t) + B_c(t) cos phi3(t) = 0 whose
/// roots are the zeros of one coordinate of gamma_t.
struct MaxwellCase {
  int id = 0;
  InitialSet set = InitialSet::ZZero;
  /// 0, 1, 2 for x, y, z.
  int coordinate = 2;
  std::function<double(const ResidualState&)> B_s;
  std::function<double(const ResidualState&)> B_c;
};

/// The nine cases in order.
const std::vector<MaxwellCase>& maxwell_cases();

ResidualState residual_state(const ARGeodesic& ar, const SRParams& params, double t);

/// Throws DomainError when gamma0 is not in the case's initial set.
double maxwell_residual(const MaxwellCase& c, const ResidualState& state);
double maxwell_residual(const MaxwellCase& c, const ARGeodesic& ar, const SRParams& params,
                        double t);

/// First t > 0 with phi3(t) = pi. Requires gamma0 on the singular set.
double first_singular_return(const ARGeodesic& ar, const SRParams& params);

/// Upper bounds on the cut time: almost-Riemannian on S^2 and sub-Riemannian on SO(3).
double cut_bound_AR(const EllipticData& ed, const SRParams& params);
double cut_bound_SR(const EllipticData& ed, const SRParams& params);

}  // namespace srgeo
