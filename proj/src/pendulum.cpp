#include "srgeo/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// Builds the modulus from whichever of m, 1 - m was computed without cancellation.
special::Modulus modulus_from(double m, double mc) {
  return m < 0.5 ? special::Modulus::from_parameter(m) : special::Modulus::from_complement(mc);
}

double wrap_period(double u, double period) {
  double w = std::fmod(u, period);
  if (w < 0.0) {
    w += period;
  }
  return w >= period ? 0.0 : w;
}

}  // namespace

SRParams::SRParams(double a, Tolerances tol) : a_(a), b_(0.0), tol_(tol) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("metric invariant a must lie in (0, 1), got " + std::to_string(a));
  }
  b_ = std::sqrt((1.0 - a) * (1.0 + a));
}

void Covector::check_level_set(double tol) const {
  const double h = p1 * p1 + p2 * p2 - 1.0;
  if (!std::isfinite(h) || !std::isfinite(p3) || std::abs(h) > tol) {
    throw DomainError("covector is not on the level set p1^2 + p2^2 = 1 (defect " +
                      std::to_string(h) + ")");
  }
}

Vec3 Covector::lax(const SRParams& params) const { return {p2, p1 * params.b(), p3}; }

double distance(const Covector& p, const Covector& q) {
  return std::max({std::abs(p.p1 - q.p1), std::abs(p.p2 - q.p2), std::abs(p.p3 - q.p3)});
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::C1: return "C1";
    case Region::C2: return "C2";
    case Region::C3: return "C3";
    case Region::C4: return "C4";
    case Region::C5: return "C5";
  }
  return "?";
}

Region parse_region(std::string_view text) {
  for (Region r : {Region::C1, Region::C2, Region::C3, Region::C4, Region::C5}) {
    if (text == to_string(r)) {
      return r;
    }
  }
  throw DomainError("unknown region '" + std::string(text) + "', expected C1..C5");
}

double energy(const Covector& p, const SRParams& params) {
  return 2.0 * p.p3 * p.p3 - params.a2() * (1.0 - 2.0 * p.p2 * p.p2);
}

Classification classify(const Covector& p0, const SRParams& params) {
  const double e = energy(p0, params);
  const double a2 = params.a2();
  const double tol = params.tol().region * std::max(1.0, a2);
  Classification out{e, Region::C1};
  if (std::abs(e + a2) <= tol) {
    out.region = Region::C4;
  } else if (std::abs(e - a2) <= tol) {
    out.region = std::abs(p0.p3) <= tol ? Region::C5 : Region::C3;
  } else if (e > a2) {
    out.region = Region::C2;
  }
  return out;
}

EllipticData to_elliptic(const Covector& p0, const SRParams& params) {
  p0.check_level_set(params.tol().level_set);
  const double a = params.a(), a2 = params.a2();
  const double tol = params.tol().region * std::max(1.0, a2);
  const Classification cls = classify(p0, params);
  if (std::abs(cls.energy + a2) <= tol && std::abs(cls.energy - a2) <= tol) {
    throw RegionBoundaryError("covector energy is within tolerance of both -a^2 and a^2");
  }

  EllipticData ed;
  ed.region = cls.region;
  switch (cls.region) {
    case Region::C1: {
      ed.k = modulus_from(p0.p2 * p0.p2 + p0.p3 * p0.p3 / a2,
                          p0.p1 * p0.p1 - p0.p3 * p0.p3 / a2);
      ed.s1 = sign_of(p0.p1);
      const double k = ed.k.k();
      const double sn = -p0.p2 / (ed.s1 * k);
      const double cn = p0.p3 / (a * k);
      const double big_k = special::complete_K(ed.k);
      const double u0 = special::ellip_F(std::atan2(sn, cn), ed.k);
      ed.theta0 = wrap_period(u0, 4.0 * big_k) / a;
      break;
    }
    case Region::C2: {
      const double den = p0.p3 * p0.p3 + a2 * p0.p2 * p0.p2;
      ed.k = modulus_from(a2 / den, (p0.p3 * p0.p3 - a2 * p0.p1 * p0.p1) / den);
      ed.s2 = sign_of(p0.p3);
      const double sn = -p0.p2 * ed.s2;
      const double cn = p0.p1;
      const double big_k = special::complete_K(ed.k);
      const double u0 = special::ellip_F(std::atan2(sn, cn), ed.k);
      ed.theta0 = ed.k.k() * wrap_period(u0, 4.0 * big_k) / a;
      break;
    }
    case Region::C3: {
      ed.s1 = sign_of(p0.p1);
      ed.s2 = sign_of(p0.p3);
      // sinh u = tanh u cosh u with cosh u = 1/|p1|.
      const double u0 = std::asinh(-ed.s1 * ed.s2 * p0.p2 / std::abs(p0.p1));
      ed.theta0 = u0 / a;
      break;
    }
    case Region::C4:
      ed.parity = p0.p1 < 0.0 ? 1 : 0;
      break;
    case Region::C5:
      ed.parity = p0.p2 < 0.0 ? 1 : 0;
      break;
  }
  return ed;
}

double pendulum_argument(const EllipticData& ed, const SRParams& params, double t) {
  switch (ed.region) {
    case Region::C1:
    case Region::C3:
      return params.a() * (ed.theta0 + t);
    case Region::C2:
      return params.a() * (ed.theta0 + t) / ed.k.k();
    default:
      return 0.0;
  }
}

Covector covector_at(const EllipticData& ed, const SRParams& params, double t) {
  const double a = params.a();
  const double u = pendulum_argument(ed, params, t);
  switch (ed.region) {
    case Region::C1: {
      const auto f = special::jacobi_sncndn(u, ed.k);
      const double k = ed.k.k();
      return {ed.s1 * f.dn, -ed.s1 * k * f.sn, a * k * f.cn};
    }
    case Region::C2: {
      const auto f = special::jacobi_sncndn(u, ed.k);
      return {f.cn, -ed.s2 * f.sn, a * ed.s2 * f.dn / ed.k.k()};
    }
    case Region::C3: {
      const double sech = 1.0 / std::cosh(u);
      return {ed.s1 * sech, -ed.s1 * ed.s2 * std::tanh(u), ed.s2 * a * sech};
    }
    case Region::C4:
      return {ed.parity % 2 == 0 ? 1.0 : -1.0, 0.0, 0.0};
    case Region::C5:
      return {0.0, ed.parity % 2 == 0 ? 1.0 : -1.0, 0.0};
  }
  return {};
}

double conserved_M(const EllipticData& ed, const SRParams& params) {
  const double a2 = params.a2();
  switch (ed.region) {
    case Region::C1:
      return 1.0 - a2 * ed.k.mc();
    case Region::C2:
      return (ed.k.m() + a2 * ed.k.mc()) / ed.k.m();
    case Region::C4:
      return 1.0 - a2;
    case Region::C3:
    case Region::C5:
      return 1.0;
  }
  return 1.0;
}

double lax_norm_squared(const Covector& p, const SRParams& params) {
  return p.p2 * p.p2 + p.p1 * p.p1 * (1.0 - params.a2()) + p.p3 * p.p3;
}

std::optional<double> pendulum_period(const EllipticData& ed, const SRParams& params) {
  switch (ed.region) {
    case Region::C1:
      return 4.0 * special::complete_K(ed.k) / params.a();
    case Region::C2:
      return 4.0 * ed.k.k() * special::complete_K(ed.k) / params.a();
    case Region::C3:
      return std::nullopt;
    case Region::C4:
    case Region::C5:
      return 0.0;
  }
  return std::nullopt;
}

}  // namespace srgeo
