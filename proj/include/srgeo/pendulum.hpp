#pragma once

// Vertical subsystem of the Hamiltonian system on the level set H = 1/2:
//
//   p1' = p3 p2,   p2' = -p3 p1,   p3' = a^2 p1 p2,
//
// a mathematical pendulum in psi (p1 = cos psi, p2 = -sin psi) with energy
// E = 2 p3^2 - a^2 cos 2psi. The cylinder splits into five strata:
//
//   C1  E in (-a^2, a^2)        oscillation, elliptic modulus k^2 = (E + a^2) / (2 a^2)
//   C2  E > a^2                 rotation,    k^2 = 2 a^2 / (E + a^2)
//   C3  E = a^2, p3 != 0        separatrix (hyperbolic functions)
//   C4  E = -a^2                stable equilibria p = ((-1)^n, 0, 0)
//   C5  E = a^2, p3 = 0         unstable equilibria p = (0, (-1)^n, 0)

#include <optional>
#include <string_view>

#include "srgeo/algebra.hpp"
#include "srgeo/special_functions.hpp"

namespace srgeo {

struct Tolerances {
  /// Region boundary: |E -+ a^2| <= region * max(1, a^2) snaps onto C3/C4/C5.
  double region = 1e-10;
  /// Zero detection for Maxwell conditions.
  double zero = 1e-10;
  /// Gate for the fixed-point provisos (sn tau != 0, ...).
  double fixed_gate = 1e-8;
  /// Level-set check p1^2 + p2^2 = 1.
  double level_set = 1e-12;
};

/// The metric invariant a in (0, 1) and the numeric tolerance bundle.
class SRParams {
 public:
  /// Throws DomainError unless 0 < a < 1.
  explicit SRParams(double a, Tolerances tol = {});

  double a() const { return a_; }
  double a2() const { return a_ * a_; }
  /// sqrt(1 - a^2)
  double b() const { return b_; }
  const Tolerances& tol() const { return tol_; }

 private:
  double a_;
  double b_;
  Tolerances tol_;
};

/// Vertical variables (p1, p2, p3).
struct Covector {
  double p1 = 1.0;
  double p2 = 0.0;
  double p3 = 0.0;

  /// Throws DomainError if |p1^2 + p2^2 - 1| > tol.
  void check_level_set(double tol = 1e-12) const;
  /// Lax vector (p2, p1 sqrt(1 - a^2), p3), transported by R_t^{-1}.
  Vec3 lax(const SRParams& params) const;
  Vec3 as_vector() const { return {p1, p2, p3}; }
};

/// Largest componentwise difference.
double distance(const Covector& p, const Covector& q);

enum class Region { C1, C2, C3, C4, C5 };

std::string_view to_string(Region r);
/// Parses "C1".."C5"; throws DomainError otherwise.
Region parse_region(std::string_view text);

/// Action-angle chart of the pendulum.
///  C1: p = (s1 dn u, -s1 k sn u, a k cn u),       u = a (theta0 + t)
///  C2: p = (cn u, -s2 sn u, a s2 dn u / k),        u = a (theta0 + t) / k
///  C3: p = (s1 / cosh u, -s1 s2 tanh u, s2 a / cosh u), u = a (theta0 + t)
///  C4: p = ((-1)^parity, 0, 0)
///  C5: p = (0, (-1)^parity, 0)
struct EllipticData {
  Region region = Region::C4;
  special::Modulus k;  // unused in C3..C5
  double theta0 = 0.0;
  int s1 = 1;
  int s2 = 1;
  int parity = 0;
};

double energy(const Covector& p, const SRParams& params);

struct Classification {
  double energy = 0.0;
  Region region = Region::C4;
};

Classification classify(const Covector& p0, const SRParams& params);

/// Throws RegionBoundaryError when the covector lies within tolerance of two
/// strata, DomainError when off the level set.
EllipticData to_elliptic(const Covector& p0, const SRParams& params);

Covector covector_at(const EllipticData& ed, const SRParams& params, double t);

/// M = |p_vec|^2 from the region formula.
double conserved_M(const EllipticData& ed, const SRParams& params);
/// Direct evaluation p2^2 + p1^2 (1 - a^2) + p3^2.
double lax_norm_squared(const Covector& p, const SRParams& params);

/// 4K/a in C1, 4kK/a in C2, 0 for the equilibria C4/C5, nullopt on the separatrix.
std::optional<double> pendulum_period(const EllipticData& ed, const SRParams& params);

/// Elliptic (or hyperbolic) argument u at time t; zero for C4/C5.
double pendulum_argument(const EllipticData& ed, const SRParams& params, double t);

}  // namespace srgeo
