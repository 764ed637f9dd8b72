#include "srgeo/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

// Bisection width for Maxwell times.
constexpr double kTimeTolerance = 1e-10;

bool in_c123(Region r) { return r == Region::C1 || r == Region::C2 || r == Region::C3; }

// Zero test on a sample is looser than the zero tolerance because the
// component is only known to rounding of the closed form.
double component_zero_tol(const SRParams& params) { return 10.0 * params.tol().zero; }

}  // namespace

SymmetryId::SymmetryId(int index) : i(index) {
  if (index < 1 || index > 7) {
    throw DomainError("symmetry index must be in 1..7, got " + std::to_string(index));
  }
}

TauXi tau_xi(const EllipticData& ed, const SRParams& params, double t) {
  return {params.a() * (t / 2.0 + ed.theta0), params.a() * t / 2.0};
}

double tau_argument(const EllipticData& ed, const SRParams& params, double t) {
  return pendulum_argument(ed, params, t / 2.0);
}

Covector eps_preimage(SymmetryId id, double t, const Covector& p0, const SRParams& params) {
  Covector pt = p0;
  if (id.i == 1 || id.i == 2 || id.i == 5 || id.i == 6) {
    pt = Geodesic(p0, params).covector(t);
  }
  switch (id.i) {
    case 1: return {pt.p1, -pt.p2, pt.p3};
    case 2: return {pt.p1, pt.p2, -pt.p3};
    case 3: return {p0.p1, -p0.p2, -p0.p3};
    case 4: return {-p0.p1, -p0.p2, p0.p3};
    case 5: return {-pt.p1, pt.p2, pt.p3};
    case 6: return {-pt.p1, -pt.p2, -pt.p3};
    default: return {-p0.p1, p0.p2, -p0.p3};
  }
}

Rotation eps_image(SymmetryId id, const Rotation& R) {
  const Rotation inv = R.transpose();
  switch (id.i) {
    case 1: return half_turn(1) * inv * half_turn(1);
    case 2: return half_turn(3) * inv * half_turn(3);
    case 3: return half_turn(2) * R * half_turn(2);
    case 4: return half_turn(3) * R * half_turn(3);
    case 5: return half_turn(2) * inv * half_turn(2);
    case 6: return inv;
    default: return half_turn(1) * R * half_turn(1);
  }
}

UnitQuaternion eps_image(SymmetryId id, const UnitQuaternion& q) {
  switch (id.i) {
    case 1: return {q.q0, -q.q1, q.q2, q.q3};
    case 2: return {q.q0, q.q1, q.q2, -q.q3};
    case 3: return {q.q0, -q.q1, q.q2, -q.q3};
    case 4: return {q.q0, -q.q1, -q.q2, q.q3};
    case 5: return {q.q0, q.q1, -q.q2, q.q3};
    case 6: return q.conjugate();
    default: return {q.q0, q.q1, -q.q2, -q.q3};
  }
}

bool is_fixed_preimage(SymmetryId id, const EllipticData& ed, const SRParams& params, double t) {
  if (!in_c123(ed.region)) {
    throw DomainError("fixed-point classification covers C1, C2 and C3 only");
  }
  const double tol = params.tol().zero;
  const double u = tau_argument(ed, params, t);
  switch (id.i) {
    case 1:
      if (ed.region == Region::C3) {
        return std::abs(u) <= tol;
      }
      return std::abs(special::jacobi_sncndn(u, ed.k).sn) <= tol;
    case 2:
      return ed.region == Region::C1 && std::abs(special::jacobi_sncndn(u, ed.k).cn) <= tol;
    case 5:
      return ed.region == Region::C2 && std::abs(special::jacobi_sncndn(u, ed.k).cn) <= tol;
    default:
      return false;
  }
}

bool fixes_covector(SymmetryId id, double t, const Covector& p0, const SRParams& params,
                    double tol) {
  return distance(eps_preimage(id, t, p0, params), p0) <= tol;
}

int symmetry_for_component(int component) {
  static constexpr std::array<int, 4> kMap{6, 1, 5, 2};
  if (component < 0 || component > 3) {
    throw DomainError("quaternion component index must be 0..3");
  }
  return kMap[component];
}

bool maxwell_proviso(int condition, const EllipticData& ed, const SRParams& params, double t) {
  const int sym = symmetry_for_component(condition - 1);
  if (!in_c123(ed.region)) {
    // Constant covectors: compare directly.
    const Covector p0 = covector_at(ed, params, 0.0);
    return distance(eps_preimage(SymmetryId(sym), t, p0, params), p0) > params.tol().fixed_gate;
  }
  const double gate = params.tol().fixed_gate;
  const double u = tau_argument(ed, params, t);
  switch (sym) {
    case 1:
      if (ed.region == Region::C3) {
        return std::abs(u) > gate;
      }
      return std::abs(special::jacobi_sncndn(u, ed.k).sn) > gate;
    case 5:
      return ed.region != Region::C2 || std::abs(special::jacobi_sncndn(u, ed.k).cn) > gate;
    case 2:
      return ed.region != Region::C1 || std::abs(special::jacobi_sncndn(u, ed.k).cn) > gate;
    default:
      return true;
  }
}

std::vector<MaxwellHit> maxwell_condition(const GeodesicSample& sample, const EllipticData& ed,
                                          const SRParams& params) {
  std::vector<MaxwellHit> hits;
  if (!(sample.t > 0.0)) {
    return hits;
  }
  const double tol = component_zero_tol(params);
  for (int c = 0; c < 4; ++c) {
    const double v = sample.q[c];
    if (std::abs(v) <= tol && maxwell_proviso(c + 1, ed, params, sample.t)) {
      hits.push_back({c + 1, symmetry_for_component(c), v});
    }
  }
  return hits;
}

std::optional<MaxwellEvent> first_maxwell_time(const Covector& p0, const SRParams& params,
                                               double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw DomainError("t_max must be positive and finite");
  }
  const Geodesic geo(p0, params);
  const EllipticData& ed = geo.elliptic();
  const auto period = pendulum_period(ed, params);
  double step = t_max / 256.0;
  if (period && *period > 0.0) {
    step = std::min(*period / 256.0, step);
  }
  const auto comp = [&](double t, int c) { return geo.quaternion(t)[c]; };

  std::optional<MaxwellEvent> best;
  for (int c = 0; c < 4; ++c) {
    double t_prev = std::min(step, t_max);
    double v_prev = comp(t_prev, c);
    const auto consider = [&](double root) {
      if (root > 0.0 && (!best || root < best->time) &&
          maxwell_proviso(c + 1, ed, params, root)) {
        best = MaxwellEvent{root, c + 1, symmetry_for_component(c)};
        return true;
      }
      return false;
    };
    if (v_prev == 0.0 && consider(t_prev)) {
      continue;
    }
    const long steps = static_cast<long>(std::ceil(t_max / step));
    for (long i = 2; i <= steps; ++i) {
      const double t = std::min(i * step, t_max);
      if (best && t_prev >= best->time) {
        break;
      }
      const double v = comp(t, c);
      if (v == 0.0 || (v_prev < 0.0) != (v < 0.0)) {
        double lo = t_prev, hi = t;
        double flo = v_prev;
        if (v != 0.0) {
          while (hi - lo > kTimeTolerance) {
            const double mid = 0.5 * (lo + hi);
            const double fm = comp(mid, c);
            if ((fm < 0.0) == (flo < 0.0) && fm != 0.0) {
              lo = mid;
              flo = fm;
            } else {
              hi = mid;
            }
          }
        }
        if (consider(v == 0.0 ? t : 0.5 * (lo + hi))) {
          break;
        }
      }
      t_prev = t;
      v_prev = v;
    }
  }
  return best;
}

Covector maxwell_partner(const MaxwellEvent& ev, const Covector& p0, const SRParams& params) {
  return eps_preimage(SymmetryId(ev.symmetry), ev.time, p0, params);
}

}  // namespace srgeo
