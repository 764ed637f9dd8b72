#include "srgeo/exp_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_forward_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("geodesic time must be finite and non-negative, got " + std::to_string(t));
  }
}

}  // namespace

EulerPhi euler_phi12(const Covector& p, double M, const SRParams& params) {
  EulerPhi e;
  const double d2 = std::max(M - p.p3 * p.p3, 0.0);
  const double d = std::sqrt(d2);
  const double rm = std::sqrt(M);
  double c2 = p.p3 / rm, s2 = d / rm;
  double c1 = p.p1 * params.b() / d, s1 = p.p2 / d;
  // The formulas are exact on the trajectory; rescale away rounding.
  const double n2 = std::hypot(c2, s2), n1 = std::hypot(c1, s1);
  c2 /= n2; s2 /= n2;
  c1 /= n1; s1 /= n1;
  e.cos_phi1 = c1;
  e.sin_phi1 = s1;
  e.cos_phi2 = c2;
  e.sin_phi2 = s2;
  e.phi1 = std::atan2(s1, c1);
  e.phi2 = std::atan2(s2, c2);
  return e;
}

double phi3_rate(const Covector& p, double M, const SRParams& params) {
  return std::sqrt(M * (1.0 - params.a2())) / (1.0 - params.a2() * p.p1 * p.p1);
}

double phi3(const EllipticData& ed, const SRParams& params, double t) {
  return Geodesic(ed, params).phi3(t);
}

Geodesic::Geodesic(const Covector& p0, const SRParams& params)
    : Geodesic(to_elliptic(p0, params), params) {}

Geodesic::Geodesic(const EllipticData& ed, const SRParams& params)
    : params_(params), ed_(ed), m_(conserved_M(ed, params)) {
  const double a = params_.a(), a2 = params_.a2();
  switch (ed_.region) {
    case Region::C1:
      pi_n_ = {a2 * ed_.k.m() / (a2 - 1.0)};
      pi_scale_ = std::sqrt(m_ / (a2 * (1.0 - a2)));
      break;
    case Region::C2:
      pi_n_ = {a2 / (a2 - 1.0)};
      pi_scale_ = std::sqrt((ed_.k.m() + a2 * ed_.k.mc()) / (a2 * (1.0 - a2)));
      break;
    case Region::C3:
      c3_offset_ = std::atan(a / params_.b() * std::tanh(a * ed_.theta0));
      break;
    default:
      break;
  }
  if (ed_.region == Region::C1 || ed_.region == Region::C2) {
    am_at_zero_ = special::jacobi_am(pendulum_argument(ed_, params_, 0.0), ed_.k);
    pi_at_zero_ = special::ellip_Pi(pi_n_, am_at_zero_, ed_.k);
  }
  const State s0 = state(0.0);
  p0_ = s0.p;
  left_ = basis_rotation(3, s0.phi.cos_phi1, -s0.phi.sin_phi1) *
          basis_rotation(1, s0.phi.cos_phi2, -s0.phi.sin_phi2);
  left_q_ = basis_quat(3, -s0.phi.phi1) * basis_quat(1, -s0.phi.phi2);
}

double Geodesic::elliptic_phase(double amplitude) const {
  return pi_scale_ * (special::ellip_Pi(pi_n_, amplitude, ed_.k) - pi_at_zero_);
}

double Geodesic::phi1_angle(const Covector& p, double amplitude) const {
  const double b = params_.b();
  if (ed_.region == Region::C2) {
    // (b cn, -s2 sn) turns once per period; follow the amplitude.
    const double wrapped = std::atan2(std::sin(amplitude), b * std::cos(amplitude));
    const double g = amplitude + std::remainder(wrapped - amplitude, kTwoPi);
    return -ed_.s2 * g;
  }
  double raw = std::atan2(p.p2, b * p.p1);
  const bool negative_branch = (ed_.region == Region::C4) ? (ed_.parity % 2 != 0)
                                                          : (ed_.s1 < 0 && ed_.region != Region::C5);
  if (negative_branch && raw < 0.0) {
    raw += kTwoPi;
  }
  return raw;
}

Geodesic::State Geodesic::state(double t) const {
  State s;
  double amplitude = 0.0;
  const double a = params_.a();
  switch (ed_.region) {
    case Region::C1:
    case Region::C2: {
      amplitude = special::jacobi_am(pendulum_argument(ed_, params_, t), ed_.k);
      const double sn = std::sin(amplitude), cn = std::cos(amplitude);
      const double dn = std::sqrt(cn * cn + ed_.k.mc() * sn * sn);
      const double k = ed_.k.k();
      if (ed_.region == Region::C1) {
        s.p = {ed_.s1 * dn, -ed_.s1 * k * sn, a * k * cn};
      } else {
        s.p = {cn, -ed_.s2 * sn, a * ed_.s2 * dn / k};
      }
      s.phi.phi3 = elliptic_phase(amplitude);
      break;
    }
    case Region::C3:
      s.p = covector_at(ed_, params_, t);
      s.phi.phi3 = params_.b() * t +
                   std::atan(a / params_.b() * std::tanh(pendulum_argument(ed_, params_, t))) -
                   c3_offset_;
      break;
    case Region::C4:
      s.p = covector_at(ed_, params_, t);
      s.phi.phi3 = t;
      break;
    case Region::C5:
      s.p = covector_at(ed_, params_, t);
      s.phi.phi3 = params_.b() * t;
      break;
  }
  const double phase = s.phi.phi3;
  s.phi = euler_phi12(s.p, m_, params_);
  s.phi.phi3 = phase;
  s.phi.phi1 = phi1_angle(s.p, amplitude);
  return s;
}

Covector Geodesic::covector(double t) const {
  if (ed_.region == Region::C1 || ed_.region == Region::C2) {
    return state(t).p;
  }
  return covector_at(ed_, params_, t);
}

double Geodesic::phi3(double t) const { return state(t).phi.phi3; }

EulerPhi Geodesic::euler(double t) const { return state(t).phi; }

Rotation Geodesic::rotation(double t) const { return sample(t).R; }

UnitQuaternion Geodesic::quaternion(double t, const UnitQuaternion& q_init) const {
  const EulerPhi e = state(t).phi;
  return q_init * left_q_ * basis_quat(3, e.phi3) * basis_quat(1, e.phi2) * basis_quat(3, e.phi1);
}

GeodesicSample Geodesic::sample(double t) const {
  require_forward_time(t);
  const State s = state(t);
  GeodesicSample out;
  out.t = t;
  out.p = s.p;
  out.phi = s.phi;
  out.R = left_ * basis_rotation(3, s.phi.phi3) *
          basis_rotation(1, s.phi.cos_phi2, s.phi.sin_phi2) *
          basis_rotation(3, s.phi.cos_phi1, s.phi.sin_phi1);
  out.q = left_q_ * basis_quat(3, s.phi.phi3) * basis_quat(1, s.phi.phi2) *
          basis_quat(3, s.phi.phi1);
  return out;
}

GeodesicSample exp(const Covector& p0, const SRParams& params, double t) {
  require_forward_time(t);
  return Geodesic(p0, params).sample(t);
}

UnitQuaternion exp_quat(const Covector& p0, const SRParams& params, double t,
                        const UnitQuaternion& q_init) {
  require_forward_time(t);
  return Geodesic(p0, params).quaternion(t, q_init);
}

std::vector<GeodesicSample> sample_geodesic(const Geodesic& geo, std::span<const double> t_grid) {
  std::vector<GeodesicSample> out;
  out.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (i > 0 && t_grid[i] < t_grid[i - 1]) {
      throw DomainError("time grid must be non-decreasing");
    }
    out.push_back(geo.sample(t_grid[i]));
  }
  return out;
}

std::vector<GeodesicSample> sample_geodesic(const Covector& p0, const SRParams& params,
                                            std::span<const double> t_grid) {
  return sample_geodesic(Geodesic(p0, params), t_grid);
}

}  // namespace srgeo
