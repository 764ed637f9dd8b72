#include "srgeo/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

template <int N>
using State = Eigen::Matrix<double, N, 1>;

std::vector<double> output_times(double t_end, const IntegratorConfig& cfg) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw DomainError("integration end time must be finite and non-negative");
  }
  std::vector<double> times{0.0};
  if (cfg.record_interval > 0.0) {
    const long n = static_cast<long>(std::floor(t_end / cfg.record_interval));
    for (long i = 1; i <= n; ++i) {
      const double t = i * cfg.record_interval;
      if (t < t_end) {
        times.push_back(t);
      }
    }
  }
  if (t_end > 0.0) {
    times.push_back(t_end);
  }
  return times;
}

// Classic RK4 between consecutive output times, each segment split into
// equal steps no longer than cfg.step.
template <int N, class Field, class Renorm>
std::vector<State<N>> rk4(State<N> y, const std::vector<double>& times,
                          const IntegratorConfig& cfg, Field f, Renorm renorm) {
  std::vector<State<N>> out;
  out.reserve(times.size());
  double t = 0.0;
  long counter = 0;
  for (double target : times) {
    const double span = target - t;
    if (span < 0.0) {
      throw DomainError("output times must be non-decreasing");
    }
    const long n = span > 0.0 ? static_cast<long>(std::ceil(span / cfg.step - 1e-9)) : 0;
    const double h = n > 0 ? span / n : 0.0;
    for (long i = 0; i < n; ++i) {
      const State<N> k1 = f(y);
      const State<N> k2 = f(y + 0.5 * h * k1);
      const State<N> k3 = f(y + 0.5 * h * k2);
      const State<N> k4 = f(y + h * k3);
      y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (++counter % cfg.reorthonormalize_every == 0) {
        renorm(y);
      }
    }
    t = target;
    out.push_back(y);
  }
  return out;
}

Covector tail(const double* d) { return {d[0], d[1], d[2]}; }

}  // namespace

void IntegratorConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("integrator step must be positive, got " + std::to_string(step));
  }
  if (reorthonormalize_every < 1) {
    throw DomainError("reorthonormalization interval must be at least 1");
  }
  if (record_interval < 0.0) {
    throw DomainError("record interval must be non-negative");
  }
}

Vec3 vertical_field(const Covector& p, const SRParams& params) {
  return {p.p3 * p.p2, -p.p3 * p.p1, params.a2() * p.p1 * p.p2};
}

Vec3 angular_velocity(const Covector& p, const SRParams& params) {
  return {p.p2 * params.b(), p.p1, 0.0};
}

double hamiltonian(const Covector& p) { return 0.5 * (p.p1 * p.p1 + p.p2 * p.p2); }

Rotation reorthonormalize(const Rotation& R) {
  Rotation out;
  Vec3 c0 = R.col(0).normalized();
  Vec3 c1 = R.col(1) - c0.dot(R.col(1)) * c0;
  c1.normalize();
  out.col(0) = c0;
  out.col(1) = c1;
  out.col(2) = c0.cross(c1);
  return out;
}

namespace {

std::vector<So3State> so3_at(const Covector& p0, const SRParams& params,
                             const std::vector<double>& times, const IntegratorConfig& cfg) {
  cfg.validate();
  p0.check_level_set(params.tol().level_set);
  State<12> y;
  y.head<9>() = Eigen::Map<const State<9>>(Rotation::Identity().eval().data());
  y.tail<3>() = p0.as_vector();
  const auto field = [&](const State<12>& s) {
    const Covector p = tail(s.data() + 9);
    const Eigen::Map<const Rotation> R(s.data());
    State<12> d;
    Eigen::Map<Rotation>(d.data()) = R * hat(angular_velocity(p, params));
    d.tail<3>() = vertical_field(p, params);
    return d;
  };
  const auto renorm = [](State<12>& s) {
    Eigen::Map<Rotation> R(s.data());
    R = reorthonormalize(R);
  };
  const auto raw = rk4<12>(y, times, cfg, field, renorm);
  std::vector<So3State> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back({times[i], Eigen::Map<const Rotation>(raw[i].data()), tail(raw[i].data() + 9)});
  }
  return out;
}

std::vector<QuatState> quat_at(const Covector& p0, const SRParams& params,
                               const std::vector<double>& times, const IntegratorConfig& cfg) {
  cfg.validate();
  p0.check_level_set(params.tol().level_set);
  State<7> y;
  y << 1.0, 0.0, 0.0, 0.0, p0.p1, p0.p2, p0.p3;
  const double b = params.b();
  const auto field = [&](const State<7>& s) {
    const Covector p = tail(s.data() + 4);
    // q * (x i + y j) / 2 with x = p2 b, y = p1.
    const double x = 0.5 * p.p2 * b, yy = 0.5 * p.p1;
    State<7> d;
    d[0] = -s[1] * x - s[2] * yy;
    d[1] = s[0] * x - s[3] * yy;
    d[2] = s[0] * yy + s[3] * x;
    d[3] = s[1] * yy - s[2] * x;
    d.tail<3>() = vertical_field(p, params);
    return d;
  };
  const auto renorm = [](State<7>& s) { s.head<4>().normalize(); };
  const auto raw = rk4<7>(y, times, cfg, field, renorm);
  std::vector<QuatState> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& s = raw[i];
    out.push_back({times[i], UnitQuaternion{s[0], s[1], s[2], s[3]}, tail(s.data() + 4)});
  }
  return out;
}

std::vector<SphereState> sphere_at(const SpherePoint& gamma0, const Covector& p0,
                                   const SRParams& params, const std::vector<double>& times,
                                   const IntegratorConfig& cfg) {
  cfg.validate();
  p0.check_level_set(params.tol().level_set);
  State<6> y;
  y << gamma0.x, gamma0.y, gamma0.z, p0.p1, p0.p2, p0.p3;
  const auto field = [&](const State<6>& s) {
    const Covector p = tail(s.data() + 3);
    State<6> d;
    d.head<3>() = Vec3(s.head<3>()).cross(angular_velocity(p, params));
    d.tail<3>() = vertical_field(p, params);
    return d;
  };
  const auto renorm = [](State<6>& s) { s.head<3>().normalize(); };
  const auto raw = rk4<6>(y, times, cfg, field, renorm);
  std::vector<SphereState> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& s = raw[i];
    out.push_back({times[i], SpherePoint{s[0], s[1], s[2]}, tail(s.data() + 3)});
  }
  return out;
}

}  // namespace

std::vector<So3State> integrate_so3(const Covector& p0, const SRParams& params, double t_end,
                                    const IntegratorConfig& cfg) {
  return so3_at(p0, params, output_times(t_end, cfg), cfg);
}

std::vector<QuatState> integrate_quat(const Covector& p0, const SRParams& params, double t_end,
                                      const IntegratorConfig& cfg) {
  return quat_at(p0, params, output_times(t_end, cfg), cfg);
}

std::vector<SphereState> integrate_sphere(const SpherePoint& gamma0, const Covector& p0,
                                          const SRParams& params, double t_end,
                                          const IntegratorConfig& cfg) {
  return sphere_at(gamma0, p0, params, output_times(t_end, cfg), cfg);
}

std::vector<Deviation> compare_with_oracle(const Covector& p0, const SRParams& params,
                                           const std::vector<double>& times,
                                           const IntegratorConfig& cfg,
                                           const SpherePoint* gamma0) {
  if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0)) {
    throw DomainError("comparison times must be sorted and non-negative");
  }
  const Geodesic geo(p0, params);
  const auto so3 = so3_at(p0, params, times, cfg);
  const auto quat = quat_at(p0, params, times, cfg);
  std::vector<SphereState> sph;
  std::optional<ARGeodesic> ar;
  if (gamma0 != nullptr) {
    ar.emplace(*gamma0, p0, params);
    sph = sphere_at(*gamma0, p0, params, times, cfg);
  }
  std::vector<Deviation> out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const GeodesicSample s = geo.sample(times[i]);
    Deviation d;
    d.t = times[i];
    d.rotation = (s.R - so3[i].R).cwiseAbs().maxCoeff();
    d.quaternion = distance(s.q, quat[i].q);
    d.covector = std::max(distance(s.p, so3[i].p), distance(s.p, quat[i].p));
    if (ar) {
      d.sphere = (ar->at(times[i]).as_vector() - sph[i].gamma.as_vector()).cwiseAbs().maxCoeff();
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace srgeo
