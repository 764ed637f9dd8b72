#pragma once

// Periodic sub-Riemannian geodesics. Over one pendulum period T the third
// Euler angle advances by 4 G1(a,k) in C1 and 4 G2(a,k) in C2; the geodesic
// closes after m periods iff G_i(a,k) = (pi/2) (n/m).

#include <optional>
#include <vector>

#include "srgeo/exp_map.hpp"

namespace srgeo {

double G1(double a, const special::Modulus& k);
double G2(double a, const special::Modulus& k);
double dG1_dk(double a, const special::Modulus& k);
double dG2_dk(double a, const special::Modulus& k);

/// G1 or G2 by region. Throws DomainError for C3..C5.
double G(Region region, double a, const special::Modulus& k);

struct PeriodicSpec {
  int n = 1;
  int m = 1;
  Region region = Region::C1;

  /// Throws DomainError for non-positive or reducible n/m, or a region other than C1/C2.
  void validate() const;
  /// n/m > 1/a in C1, n/m > 1 in C2.
  bool admissible(const SRParams& params) const;
  double target() const;
};

struct PeriodicGeodesic {
  PeriodicSpec spec;
  special::Modulus k;
  double T = 0.0;
  double total_time = 0.0;
  /// Whether the closed loop is null-homotopic, i.e. q(mT) = +1.
  bool contractible = false;
  /// |G(a,k) - (pi/2) n/m| at the solution.
  double residual = 0.0;

  /// Pendulum data with the solved modulus; signs select the connected component.
  EllipticData elliptic(double theta0 = 0.0, int sign = 1) const;
};

/// Lift sign (+1 or -1) expected at t = mT from the winding of the Euler angles.
int expected_lift_sign(const PeriodicSpec& spec);

/// None when the existence condition fails or the target is not bracketed with 1 - k^2 >= 4e-12.
std::optional<PeriodicGeodesic> solve_periodic(const PeriodicSpec& spec, const SRParams& params);

struct ClosureReport {
  double closure_error = 0.0;
  int lift_sign = 1;
  /// max |q(mT) - lift_sign|
  double lift_error = 0.0;
};

ClosureReport verify_closure(const PeriodicGeodesic& pg, const EllipticData& ed,
                             const SRParams& params);

/// All admissible irreducible n/m with n <= max_n, m <= max_m, in both regions
/// unless one is given, sorted by total time.
std::vector<PeriodicGeodesic> enumerate_periodic(const SRParams& params, int max_n, int max_m,
                                                 std::optional<Region> region = std::nullopt);

}  // namespace srgeo
