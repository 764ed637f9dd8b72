#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle/oracles.hpp"
#include "srgeo/errors.hpp"
#include "srgeo/verifier.hpp"

using namespace srgeo;
using std::numbers::pi;

namespace {

double max_abs(const Eigen::Matrix3d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("configuration checks") {
  const SRParams params(0.5);
  CHECK_THROWS_AS(integrate_so3({1, 0, 0}, params, 1.0, {0.0, 100, 0}), DomainError);
  CHECK_THROWS_AS(integrate_so3({1, 0, 0}, params, 1.0, {1e-3, 0, 0}), DomainError);
  CHECK_THROWS_AS(integrate_quat({1, 0, 0}, params, -1.0), DomainError);
  CHECK_THROWS_AS(integrate_so3({1, 1, 0}, params, 1.0), DomainError);
  const std::vector<double> unsorted{1.0, 0.5};
  CHECK_THROWS_AS(compare_with_oracle({1, 0, 0}, params, unsorted), DomainError);
  const auto rec = integrate_quat({1, 0, 0.2}, params, 1.0, {1e-3, 100, 0.25});
  REQUIRE(rec.size() == 5);
  CHECK(rec.back().t == 1.0);
  CHECK(rec[2].t == 0.5);
}

TEST_CASE("stable equilibrium integrates to the exact subgroup") {
  const SRParams params(0.5);
  const auto so3 = integrate_so3({1, 0, 0}, params, pi);
  CHECK(max_abs(so3.back().R - half_turn(2)) < 1e-12);
  const auto quat = integrate_quat({1, 0, 0}, params, 2 * pi);
  CHECK(distance(quat.back().q, -UnitQuaternion{}) < 1e-12);
}

TEST_CASE("invariants along the integration") {
  oracle::Draws rng(131);
  for (int n = 0; n < 10; ++n) {
    const SRParams params(rng.a());
    const Covector p0 = rng.covector();
    const IntegratorConfig cfg{1e-3, 100, 0.5};
    const auto so3 = integrate_so3(p0, params, 20.0, cfg);
    const auto quat = integrate_quat(p0, params, 20.0, cfg);
    const double M0 = lax_norm_squared(p0, params);
    REQUIRE(so3.size() == quat.size());
    for (std::size_t i = 0; i < so3.size(); ++i) {
      CHECK(std::abs(hamiltonian(so3[i].p) - 0.5) < 1e-10);
      CHECK(std::abs(lax_norm_squared(so3[i].p, params) - M0) < 1e-10);
      CHECK(orthogonality_defect(so3[i].R) < 1e-10);
      CHECK(std::abs(quat[i].q.norm() - 1) < 1e-10);
      CHECK(max_abs(quat_to_rotation(quat[i].q) - so3[i].R) < 1e-9);
      CHECK((so3[i].R.transpose() * p0.lax(params) - so3[i].p.lax(params)).norm() < 1e-9);
    }
  }
}

TEST_CASE("closed forms agree with the integrator") {
  oracle::Draws rng(137);
  const std::vector<double> times{0.0, 1.0, 5.0, 10.0};
  for (int n = 0; n < 12; ++n) {
    const SRParams params(rng.a());
    const Region r = std::array{Region::C1, Region::C2, Region::C3}[n % 3];
    const Covector p0 = rng.covector_in(r, params);
    const auto dev = compare_with_oracle(p0, params, times);
    for (const Deviation& d : dev) {
      CHECK(d.rotation < 1e-10);
      CHECK(d.quaternion < 1e-10);
      CHECK(d.covector < 1e-10);
    }
  }
}

TEST_CASE("closed forms stay accurate next to the separatrix") {
  const SRParams params(0.65);
  const double a = params.a();
  for (double gap : {1e-6, 1e-8, 1e-9}) {
    // E - a^2 = 2 (p3^2 - a^2 p1^2) = -gap on the C1 side, +gap on the C2 side
    for (int side : {-1, 1}) {
      const double p1 = 0.3;
      const double p3 = std::sqrt(a * a * p1 * p1 + side * gap / 2);
      const Covector p0{p1, -std::sqrt(1 - p1 * p1), p3};
      REQUIRE(classify(p0, params).region == (side < 0 ? Region::C1 : Region::C2));
      const std::vector<double> times{3.0, 8.0};
      for (const Deviation& d : compare_with_oracle(p0, params, times)) {
        CHECK(d.rotation < 1e-10);
        CHECK(d.quaternion < 1e-10);
      }
    }
  }
}

TEST_CASE("sphere integration matches the projection") {
  oracle::Draws rng(139);
  for (int n = 0; n < 10; ++n) {
    const SRParams params(rng.a());
    const SpherePoint g0{0, 0, 1};
    const Covector p0 = transversal_family(g0, params).at(rng.uniform(0, 2 * pi));
    const auto sph = integrate_sphere(g0, p0, params, 10.0, {1e-3, 100, 1.0});
    for (const SphereState& s : sph) {
      CHECK((s.gamma.as_vector() - project(p0, params, g0, s.t).as_vector()).norm() < 1e-10);
      const Vec3 v = s.gamma.as_vector().cross(angular_velocity(s.p, params));
      CHECK(std::abs(v.dot(s.gamma.as_vector())) < 1e-12);
    }
    const std::vector<double> times{2.0, 7.0};
    for (const Deviation& d : compare_with_oracle(p0, params, times, {}, &g0)) {
      CHECK(d.sphere < 1e-10);
    }
  }
}

TEST_CASE("fourth-order convergence") {
  const SRParams params(0.55);
  const Covector p0{0.8, 0.6, 0.35};
  const Rotation exact = exp(p0, params, 6.0).R;
  const auto err = [&](double h) {
    return max_abs(integrate_so3(p0, params, 6.0, {h, 1 << 30, 0}).back().R - exact);
  };
  const double e1 = err(0.04), e2 = err(0.02), e3 = err(0.01);
  CHECK(e1 / e2 == doctest::Approx(16).epsilon(0.2));
  CHECK(e2 / e3 == doctest::Approx(16).epsilon(0.2));
}

TEST_CASE("Gram-Schmidt") {
  Rotation r = basis_rotation(1, 0.3) * basis_rotation(3, 1.1);
  r(0, 1) += 1e-7;
  const Rotation fixed = reorthonormalize(r);
  CHECK(orthogonality_defect(fixed) < 1e-15);
  CHECK(max_abs(fixed - r) < 1e-6);
}
