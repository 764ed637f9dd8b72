#pragma once

// Elliptic integrals of the first, second and third kind and the Jacobi
// elliptic functions, parameterised by the modulus k (m = k^2).
//
// Integrals are evaluated through Carlson's symmetric forms R_F, R_D, R_J
// (duplication algorithm, relative tolerance 1e-15). Incomplete integrals
// accept any real amplitude: the amplitude is reduced to [-pi/2, pi/2] with
// F(phi + j pi) = F(phi) + 2 j K and its analogues for E and Pi.
//
// Moduli with k >= 1 - 1e-12 are rejected with DomainError; the logarithmic
// regime near k = 1 is never entered.

#include <cmath>

namespace srgeo::special {

inline constexpr double kMaxModulus = 1.0 - 1e-12;
inline constexpr double kCarlsonTolerance = 1e-15;

/// Elliptic modulus k together with the parameter m = k^2.
class Modulus {
 public:
  Modulus() = default;
  /// Throws DomainError unless 0 <= k < 1 - 1e-12.
  explicit Modulus(double k);
  static Modulus from_parameter(double m);
  /// From 1 - k^2; keeps full relative precision when k is close to 1.
  static Modulus from_complement(double mc);

  double k() const { return k_; }
  double m() const { return m_; }
  /// Complementary parameter 1 - m.
  double mc() const { return mc_; }

 private:
  double k_ = 0.0;
  double m_ = 0.0;
  double mc_ = 1.0;
};

/// Third-kind characteristic n, integrand 1 / ((1 - n sin^2) sqrt(1 - m sin^2)).
struct Characteristic {
  double n = 0.0;
};

// Carlson symmetric integrals (arguments non-negative, at most one zero).
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rc(double x, double y);
/// R_J for p > 0.
double carlson_rj(double x, double y, double z, double p);

double ellip_F(double phi, const Modulus& mod);
double ellip_E(double phi, const Modulus& mod);
/// Throws DomainError for n >= 1.
double ellip_Pi(Characteristic n, double phi, const Modulus& mod);

double complete_K(const Modulus& mod);
double complete_E(const Modulus& mod);
double complete_Pi(Characteristic n, const Modulus& mod);

/// Jacobi amplitude, the inverse of u = F(am(u)). Continuous and unwrapped:
/// am(u + 2jK) = am(u) + j pi.
double jacobi_am(double u, const Modulus& mod);

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

JacobiTriple jacobi_sncndn(double u, const Modulus& mod);

/// Pi(n, am(u)) continued through every period, equal to
/// the integral of 1/(1 - n sn^2) from 0 to u.
double pi_of_argument(Characteristic n, double u, const Modulus& mod);

struct EllipticDerivatives {
  double dK_dk = 0.0;
  double dE_dk = 0.0;
  double dPi_dk = 0.0;
  double dPi_dn = 0.0;
};

/// Closed-form derivatives of K, E and the complete Pi(n; k^2).
/// Requires k in (0, 1), n < 1, n != 0 and n != k^2.
EllipticDerivatives ellip_derivatives(Characteristic n, const Modulus& mod);

}  // namespace srgeo::special
