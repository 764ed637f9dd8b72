#include "srgeo/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo::special {

namespace {

using std::abs;
using std::sqrt;

constexpr double kPi = std::numbers::pi;

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": arguments must be finite and non-negative");
  }
}

void require_characteristic(Characteristic n) {
  if (!(n.n < 1.0) || !std::isfinite(n.n)) {
    throw DomainError("elliptic Pi: characteristic n must be finite and < 1, got " +
                      std::to_string(n.n));
  }
}

// atan(sqrt(d))/sqrt(d) for d > 0, atanh(sqrt(-d))/sqrt(-d) for d < 0.
double rc_kernel(double d) {
  if (abs(d) < 1e-4) {
    return 1.0 + d * (-1.0 / 3.0 + d * (1.0 / 5.0 + d * (-1.0 / 7.0 + d / 9.0)));
  }
  if (d > 0.0) {
    const double s = sqrt(d);
    return std::atan(s) / s;
  }
  const double s = sqrt(-d);
  return std::atanh(s) / s;
}

// Halves the amplitude range: phi = j*pi + r with r in [-pi/2, pi/2].
struct ReducedAmplitude {
  double r;
  double j;
};

ReducedAmplitude reduce_amplitude(double phi) {
  const double j = std::nearbyint(phi / kPi);
  return {phi - j * kPi, j};
}

}  // namespace

Modulus::Modulus(double k) : k_(k), m_(k * k), mc_((1.0 - k) * (1.0 + k)) {
  if (!(k >= 0.0) || !(k < kMaxModulus)) {
    throw DomainError("elliptic modulus must satisfy 0 <= k < 1 - 1e-12, got " +
                      std::to_string(k));
  }
}

Modulus Modulus::from_parameter(double m) {
  if (!(m >= 0.0) || !(m < 1.0)) {
    throw DomainError("elliptic parameter must satisfy 0 <= m < 1, got " + std::to_string(m));
  }
  Modulus mod(sqrt(m));
  mod.m_ = m;
  mod.mc_ = 1.0 - m;
  return mod;
}

Modulus Modulus::from_complement(double mc) {
  if (!(mc <= 1.0) || !(mc > (1.0 - kMaxModulus) * (1.0 + kMaxModulus))) {
    throw DomainError("complementary parameter must satisfy 2e-12 < 1 - k^2 <= 1, got " +
                      std::to_string(mc));
  }
  Modulus mod(std::sqrt(1.0 - mc));
  mod.m_ = 1.0 - mc;
  mod.mc_ = mc;
  return mod;
}

double carlson_rf(double x, double y, double z) {
  require_nonnegative(x, "R_F");
  require_nonnegative(y, "R_F");
  require_nonnegative(z, "R_F");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("R_F: at most one argument may be zero");
  }
  const double a0 = (x + y + z) / 3.0;
  const double q = std::pow(3.0 * kCarlsonTolerance, -1.0 / 6.0) *
                   std::max({abs(a0 - x), abs(a0 - y), abs(a0 - z)});
  double a = a0;
  double scale = 1.0;  // 4^-m
  const double x0 = x, y0 = y;
  while (scale * q >= abs(a)) {
    const double sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a0 - x0) * scale / a;
  const double yy = (a0 - y0) * scale / a;
  const double zz = -(xx + yy);
  const double e2 = xx * yy - zz * zz;
  const double e3 = xx * yy * zz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / sqrt(a);
}

double carlson_rd(double x, double y, double z) {
  require_nonnegative(x, "R_D");
  require_nonnegative(y, "R_D");
  if (!(z > 0.0) || (x == 0.0 && y == 0.0)) {
    throw DomainError("R_D: requires z > 0 and at most one of x, y zero");
  }
  const double a0 = (x + y + 3.0 * z) / 5.0;
  const double q = std::pow(0.25 * kCarlsonTolerance, -1.0 / 6.0) *
                   std::max({abs(a0 - x), abs(a0 - y), abs(a0 - z)});
  double a = a0;
  double scale = 1.0;
  double sum = 0.0;
  const double x0 = x, y0 = y;
  while (scale * q >= abs(a)) {
    const double sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    sum += scale / (sz * (z + lambda));
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a0 - x0) * scale / a;
  const double yy = (a0 - y0) * scale / a;
  const double zz = -(xx + yy) / 3.0;
  const double xy = xx * yy;
  const double z2 = zz * zz;
  const double e2 = xy - 6.0 * z2;
  const double e3 = (3.0 * xy - 8.0 * z2) * zz;
  const double e4 = 3.0 * (xy - z2) * z2;
  const double e5 = xy * z2 * zz;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                        3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return scale * series / (a * sqrt(a)) + 3.0 * sum;
}

double carlson_rc(double x, double y) {
  require_nonnegative(x, "R_C");
  if (!(y > 0.0)) {
    throw DomainError("R_C: requires y > 0");
  }
  if (x == 0.0) {
    return kPi / (2.0 * sqrt(y));
  }
  return rc_kernel((y - x) / x) / sqrt(x);
}

double carlson_rj(double x, double y, double z, double p) {
  require_nonnegative(x, "R_J");
  require_nonnegative(y, "R_J");
  require_nonnegative(z, "R_J");
  if (!(p > 0.0) || (x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("R_J: requires p > 0 and at most one of x, y, z zero");
  }
  const double a0 = (x + y + z + 2.0 * p) / 5.0;
  const double delta = (p - x) * (p - y) * (p - z);
  const double q = std::pow(0.25 * kCarlsonTolerance, -1.0 / 6.0) *
                   std::max({abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p)});
  double a = a0;
  double scale = 1.0;
  double sum = 0.0;
  const double x0 = x, y0 = y, z0 = z;
  while (scale * q >= abs(a)) {
    const double sx = sqrt(x), sy = sqrt(y), sz = sqrt(z), sp = sqrt(p);
    const double lambda = sx * sy + sx * sz + sy * sz;
    const double d = (sp + sx) * (sp + sy) * (sp + sz);
    const double e = scale * scale * scale * delta / (d * d);
    sum += scale / d * rc_kernel(e);
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    p = 0.25 * (p + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a0 - x0) * scale / a;
  const double yy = (a0 - y0) * scale / a;
  const double zz = (a0 - z0) * scale / a;
  const double pp = -(xx + yy + zz) / 2.0;
  const double p2 = pp * pp;
  const double xyz = xx * yy * zz;
  const double e2 = xx * yy + xx * zz + yy * zz - 3.0 * p2;
  const double e3 = xyz + 2.0 * e2 * pp + 4.0 * p2 * pp;
  const double e4 = (2.0 * xyz + e2 * pp + 3.0 * p2 * pp) * pp;
  const double e5 = xyz * p2;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                        3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return scale * series / (a * sqrt(a)) + 6.0 * sum;
}

double complete_K(const Modulus& mod) { return carlson_rf(0.0, mod.mc(), 1.0); }

double complete_E(const Modulus& mod) {
  return complete_K(mod) - mod.m() / 3.0 * carlson_rd(0.0, mod.mc(), 1.0);
}

double complete_Pi(Characteristic n, const Modulus& mod) {
  require_characteristic(n);
  return complete_K(mod) + n.n / 3.0 * carlson_rj(0.0, mod.mc(), 1.0, 1.0 - n.n);
}

double ellip_F(double phi, const Modulus& mod) {
  const auto [r, j] = reduce_amplitude(phi);
  const double s = std::sin(r), c = std::cos(r);
  double value = s * carlson_rf(c * c, 1.0 - mod.m() * s * s, 1.0);
  if (j != 0.0) {
    value += 2.0 * j * complete_K(mod);
  }
  return value;
}

double ellip_E(double phi, const Modulus& mod) {
  const auto [r, j] = reduce_amplitude(phi);
  const double s = std::sin(r), c = std::cos(r);
  const double c2 = c * c, delta2 = 1.0 - mod.m() * s * s;
  double value = s * carlson_rf(c2, delta2, 1.0);
  if (mod.m() != 0.0 && s != 0.0) {
    value -= mod.m() / 3.0 * s * s * s * carlson_rd(c2, delta2, 1.0);
  }
  if (j != 0.0) {
    value += 2.0 * j * complete_E(mod);
  }
  return value;
}

double ellip_Pi(Characteristic n, double phi, const Modulus& mod) {
  require_characteristic(n);
  const auto [r, j] = reduce_amplitude(phi);
  const double s = std::sin(r), c = std::cos(r);
  const double c2 = c * c, delta2 = 1.0 - mod.m() * s * s;
  double value = s * carlson_rf(c2, delta2, 1.0);
  if (n.n != 0.0 && s != 0.0) {
    value += n.n / 3.0 * s * s * s * carlson_rj(c2, delta2, 1.0, 1.0 - n.n * s * s);
  }
  if (j != 0.0) {
    value += 2.0 * j * complete_Pi(n, mod);
  }
  return value;
}

namespace {

// Solves F(phi) = u for 0 <= u <= K, phi in [0, pi/2]. Newton with a
// bisection fallback whenever the step leaves the bracket.
double invert_first_kind(double u, double quarter_period, const Modulus& mod) {
  if (u <= 0.0) {
    return 0.0;
  }
  if (u >= quarter_period) {
    return kPi / 2.0;
  }
  double lo = 0.0, hi = kPi / 2.0;
  double phi = kPi / 2.0 * u / quarter_period;
  for (int iter = 0; iter < 200; ++iter) {
    const double f = ellip_F(phi, mod) - u;
    if (f > 0.0) {
      hi = phi;
    } else {
      lo = phi;
    }
    const double s = std::sin(phi);
    double next = phi - f * sqrt(1.0 - mod.m() * s * s);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double step = abs(next - phi);
    phi = next;
    if (step <= 2e-16 * std::max(1.0, phi) || hi - lo <= 4e-16) {
      break;
    }
  }
  return phi;
}

}  // namespace

double jacobi_am(double u, const Modulus& mod) {
  if (mod.m() == 0.0) {
    return u;
  }
  const double big_k = complete_K(mod);
  const double j = std::nearbyint(u / (2.0 * big_k));
  const double r = u - 2.0 * j * big_k;
  const double phi = std::copysign(invert_first_kind(abs(r), big_k, mod), r);
  return phi + j * kPi;
}

JacobiTriple jacobi_sncndn(double u, const Modulus& mod) {
  const double phi = jacobi_am(u, mod);
  JacobiTriple out;
  out.sn = std::sin(phi);
  out.cn = std::cos(phi);
  out.dn = sqrt(out.cn * out.cn + mod.mc() * out.sn * out.sn);
  return out;
}

double pi_of_argument(Characteristic n, double u, const Modulus& mod) {
  require_characteristic(n);
  const double big_k = complete_K(mod);
  const double j = std::nearbyint(u / (2.0 * big_k));
  const double r = u - 2.0 * j * big_k;
  double phi = r;
  if (mod.m() != 0.0) {
    phi = std::copysign(invert_first_kind(abs(r), big_k, mod), r);
  }
  double value = ellip_Pi(n, phi, mod);
  if (j != 0.0) {
    value += 2.0 * j * complete_Pi(n, mod);
  }
  return value;
}

EllipticDerivatives ellip_derivatives(Characteristic n, const Modulus& mod) {
  const double k = mod.k(), m = mod.m(), mc = mod.mc();
  if (!(k > 0.0)) {
    throw DomainError("elliptic derivatives: k must be in (0, 1)");
  }
  require_characteristic(n);
  if (n.n == 0.0 || abs(n.n - m) < 1e-14) {
    throw DomainError("elliptic derivatives: singular characteristic (n = 0 or n = k^2)");
  }
  const double big_k = complete_K(mod);
  const double big_e = complete_E(mod);
  const double big_pi = complete_Pi(n, mod);
  EllipticDerivatives d;
  d.dK_dk = (big_e - mc * big_k) / (k * mc);
  d.dE_dk = (big_e - big_k) / k;
  d.dPi_dk = k / (mc * (m - n.n)) * (big_e - mc * big_pi);
  d.dPi_dn = (big_e + (m - n.n) * big_k / n.n + (n.n * n.n - m) * big_pi / n.n) /
             (2.0 * (m - n.n) * (n.n - 1.0));
  return d;
}

}  // namespace srgeo::special
