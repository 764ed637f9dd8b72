#include "srgeo/sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 lax_vector(const Covector& p, const SRParams& params) { return p.lax(params); }

}  // namespace

SpherePoint SpherePoint::from_vector(const Vec3& v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitSphereTolerance) {
    throw DomainError("point is not on the unit sphere (|v| = " + std::to_string(v.norm()) + ")");
  }
  return {v.x(), v.y(), v.z()};
}

double transversality_defect(const Covector& p0, const SpherePoint& gamma0,
                             const SRParams& params) {
  return lax_vector(p0, params).dot(gamma0.as_vector());
}

bool singular_set(const SpherePoint& p) { return std::abs(p.z) <= kUnitSphereTolerance; }

ARGeodesic::ARGeodesic(const SpherePoint& gamma0, const Covector& p0, const SRParams& params)
    : gamma0_(SpherePoint::from_vector(gamma0.as_vector())), p0_(p0), geo_(p0, params) {
  const double d = transversality_defect(p0, gamma0_, params);
  if (std::abs(d) > kTransversalityTolerance) {
    throw TransversalityError("initial covector is not transversal to gamma0 (<p_vec, gamma0> = " +
                              std::to_string(d) + ")");
  }
}

SpherePoint ARGeodesic::at(double t) const {
  const Vec3 g = geo_.rotation(t).transpose() * gamma0_.as_vector();
  return {g.x(), g.y(), g.z()};
}

SpherePoint project(const Covector& p0, const SRParams& params, const SpherePoint& gamma0,
                    double t) {
  return ARGeodesic(gamma0, p0, params).at(t);
}

Covector TransversalFamily::at(double s, int branch) const {
  if (chart == Chart::Psi) {
    const double c = std::cos(s), sn = std::sin(s);
    return {c, -sn, (gamma0.x * sn - b * gamma0.y * c) / gamma0.z};
  }
  const double psi = psi_star + (branch % 2 != 0 ? kPi : 0.0);
  return {std::cos(psi), -std::sin(psi), s};
}

TransversalFamily transversal_family(const SpherePoint& gamma0, const SRParams& params) {
  TransversalFamily f;
  f.gamma0 = SpherePoint::from_vector(gamma0.as_vector());
  f.b = params.b();
  if (singular_set(f.gamma0)) {
    f.chart = TransversalFamily::Chart::P3;
    f.psi_star = std::atan2(f.b * f.gamma0.y, f.gamma0.x);
  }
  return f;
}

std::string_view to_string(InitialSet s) {
  switch (s) {
    case InitialSet::XPole: return "x0=+-1";
    case InitialSet::YPole: return "y0=+-1";
    case InitialSet::ZPole: return "z0=+-1";
    case InitialSet::XZero: return "x0=0";
    case InitialSet::YZero: return "y0=0";
    case InitialSet::ZZero: return "z0=0";
  }
  return "?";
}

bool in_initial_set(InitialSet s, const SpherePoint& g) {
  const double tol = kUnitSphereTolerance;
  switch (s) {
    case InitialSet::XPole: return std::abs(std::abs(g.x) - 1.0) <= tol;
    case InitialSet::YPole: return std::abs(std::abs(g.y) - 1.0) <= tol;
    case InitialSet::ZPole: return std::abs(std::abs(g.z) - 1.0) <= tol;
    case InitialSet::XZero: return std::abs(g.x) <= tol;
    case InitialSet::YZero: return std::abs(g.y) <= tol;
    case InitialSet::ZZero: return std::abs(g.z) <= tol;
  }
  return false;
}

const std::vector<MaxwellCase>& maxwell_cases() {
  using S = ResidualState;
  static const std::vector<MaxwellCase> cases = {
      {1, InitialSet::XPole, 1,
       [](const S& s) { return s.b * s.p.p3 * s.p.p1; },
       [](const S& s) { return std::sqrt(s.M) * s.p.p2; }},
      {2, InitialSet::XPole, 2, [](const S&) { return 1.0; }, [](const S&) { return 0.0; }},
      {3, InitialSet::YPole, 0,
       [](const S& s) { return -s.p.p3 * s.p.p2; },
       [](const S& s) { return std::sqrt(s.M) * s.b * s.p.p1; }},
      {4, InitialSet::YPole, 2, [](const S&) { return 1.0; }, [](const S&) { return 0.0; }},
      {5, InitialSet::ZPole, 0,
       [](const S& s) { return std::sqrt(s.M) * s.b * s.p.p1; },
       [](const S& s) { return s.p.p3 * s.p.p2; }},
      {6, InitialSet::ZPole, 1,
       [](const S& s) { return std::sqrt(s.M) * s.p.p2; },
       [](const S& s) { return -s.b * s.p.p3 * s.p.p1; }},
      {7, InitialSet::ZZero, 2, [](const S&) { return 1.0; }, [](const S&) { return 0.0; }},
      {8, InitialSet::YZero, 1,
       [](const S& s) {
         return s.M * s.gamma0.z * s.p.p2 -
                s.b * s.b * s.gamma0.x * s.p.p3 * s.p_init.p1 * s.p.p1;
       },
       [](const S& s) {
         return -s.b * std::sqrt(s.M) *
                (s.gamma0.z * s.p.p3 * s.p.p1 + s.gamma0.x * s.p_init.p1 * s.p.p2);
       }},
      {9, InitialSet::XZero, 0,
       [](const S& s) {
         return s.gamma0.y * s.p.p3 * s.p_init.p2 * s.p.p2 - s.M * s.b * s.gamma0.z * s.p.p1;
       },
       [](const S& s) {
         return -std::sqrt(s.M) *
                (s.b * s.gamma0.y * s.p.p1 * s.p_init.p2 + s.gamma0.z * s.p.p3 * s.p.p2);
       }},
  };
  return cases;
}

ResidualState residual_state(const ARGeodesic& ar, const SRParams& params, double t) {
  const Geodesic& geo = ar.geodesic();
  ResidualState s;
  s.t = t;
  s.p = geo.covector(t);
  s.p_init = geo.initial_covector();
  s.M = geo.M();
  s.phi3 = geo.phi3(t);
  s.b = params.b();
  s.gamma0 = ar.gamma0();
  return s;
}

double maxwell_residual(const MaxwellCase& c, const ResidualState& state) {
  if (!in_initial_set(c.set, state.gamma0)) {
    throw DomainError("Maxwell case " + std::to_string(c.id) + " requires " +
                      std::string(to_string(c.set)));
  }
  return c.B_s(state) * std::sin(state.phi3) + c.B_c(state) * std::cos(state.phi3);
}

double maxwell_residual(const MaxwellCase& c, const ARGeodesic& ar, const SRParams& params,
                        double t) {
  return maxwell_residual(c, residual_state(ar, params, t));
}

double first_singular_return(const ARGeodesic& ar, const SRParams& params) {
  if (!singular_set(ar.gamma0())) {
    throw DomainError("first singular return needs gamma0 on the equator z = 0");
  }
  const Geodesic& geo = ar.geodesic();
  switch (geo.elliptic().region) {
    case Region::C4: return kPi;
    case Region::C5: return kPi / params.b();
    default: break;
  }
  double lo = 0.0;
  double hi = cut_bound_AR(geo.elliptic(), params);
  if (geo.phi3(hi) < kPi) {
    throw InvariantViolation("phi3 does not reach pi before the cut-time bound");
  }
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (geo.phi3(mid) < kPi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double cut_bound_AR(const EllipticData& ed, const SRParams& params) {
  const double a = params.a();
  switch (ed.region) {
    case Region::C1: return 2.0 * special::complete_K(ed.k) / a;
    case Region::C2: return 2.0 * ed.k.k() * special::complete_K(ed.k) / a;
    case Region::C3: return kPi / params.b();
    case Region::C4: return kPi;
    case Region::C5: return kPi / params.b();
  }
  return kPi;
}

double cut_bound_SR(const EllipticData& ed, const SRParams& params) {
  if (ed.region == Region::C4) {
    return 2.0 * kPi;
  }
  return cut_bound_AR(ed, params) + kPi;
}

}  // namespace srgeo
