#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle/oracles.hpp"
#include "srgeo/errors.hpp"
#include "srgeo/periodic.hpp"

using namespace srgeo;
using special::Modulus;
using std::numbers::pi;

TEST_CASE("G functions at the ends of the modulus range") {
  for (int i = 1; i <= 20; ++i) {
    const double a = 0.05 * i - 0.025;
    CHECK(G1(a, Modulus(0.0)) == doctest::Approx(pi / (2 * a)).epsilon(1e-14));
    CHECK(G2(a, Modulus(0.0)) == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(G1(a, Modulus::from_complement(1e-11)) > 2 * G1(a, Modulus(0.9)));
    CHECK(G2(a, Modulus::from_complement(1e-11)) > 2 * G2(a, Modulus(0.99)));
    for (double k : {0.3, 0.9, 0.999}) {
      const double lower = (1 - a * a) * special::complete_K(Modulus(k));
      CHECK(G1(a, Modulus(k)) >= lower);
      CHECK(G2(a, Modulus(k)) >= lower);
    }
  }
  CHECK_THROWS_AS(G1(1.0, Modulus(0.5)), DomainError);
  CHECK_THROWS_AS(G(Region::C3, 0.5, Modulus(0.5)), DomainError);
}

TEST_CASE("G functions are increasing in k") {
  for (double a : {0.1, 0.37, 0.5, 0.72, 0.93}) {
    double g1 = G1(a, Modulus(0.0)), g2 = G2(a, Modulus(0.0));
    for (int i = 1; i < 100; ++i) {
      const Modulus k(0.01 * i);
      CHECK(G1(a, k) > g1);
      CHECK(G2(a, k) > g2);
      CHECK(dG1_dk(a, k) > 0.0);
      CHECK(dG2_dk(a, k) > 0.0);
      g1 = G1(a, k);
      g2 = G2(a, k);
    }
  }
}

TEST_CASE("G derivatives against central differences") {
  for (double a : {0.2, 0.6, 0.9}) {
    for (double k : {0.05, 0.4, 0.8, 0.97}) {
      const auto g1 = [a](double x) { return G1(a, Modulus(x)); };
      const auto g2 = [a](double x) { return G2(a, Modulus(x)); };
      CHECK(dG1_dk(a, Modulus(k)) == doctest::Approx(oracle::derivative(g1, k, 1e-6)).epsilon(1e-6));
      CHECK(dG2_dk(a, Modulus(k)) == doctest::Approx(oracle::derivative(g2, k, 1e-6)).epsilon(1e-6));
    }
    CHECK(std::abs(dG1_dk(a, Modulus(1e-6))) < 1e-5);
  }
}

TEST_CASE("fraction validation") {
  const SRParams params(0.8);
  CHECK_THROWS_AS(solve_periodic({4, 2, Region::C1}, params), DomainError);
  CHECK_THROWS_AS(solve_periodic({0, 1, Region::C1}, params), DomainError);
  CHECK_THROWS_AS(solve_periodic({3, 1, Region::C4}, params), DomainError);
  CHECK_FALSE(solve_periodic({5, 4, Region::C1}, params).has_value());
  CHECK(solve_periodic({4, 3, Region::C1}, params).has_value());
  CHECK_FALSE(solve_periodic({1, 1, Region::C2}, params).has_value());
  CHECK(PeriodicSpec{3, 2, Region::C1}.target() == doctest::Approx(0.75 * pi));
}

TEST_CASE("solved geodesics close up") {
  oracle::Draws rng(61);
  for (double a : {0.3, 0.55, 0.8, 0.9}) {
    const SRParams params(a);
    for (const auto& pg : enumerate_periodic(params, 6, 4)) {
      CHECK(pg.residual < 1e-11);
      CHECK(G(pg.spec.region, a, pg.k) == doctest::Approx(pg.spec.target()).epsilon(1e-11));
      const double period = pg.spec.region == Region::C1
                                ? 4 * special::complete_K(pg.k) / a
                                : 4 * pg.k.k() * special::complete_K(pg.k) / a;
      CHECK(pg.T == doctest::Approx(period).epsilon(1e-14));
      for (int sign : {1, -1}) {
        const EllipticData ed = pg.elliptic(rng.uniform(0, pg.T), sign);
        const ClosureReport rep = verify_closure(pg, ed, params);
        CHECK(rep.closure_error < 1e-8);
        CHECK(rep.lift_error < 1e-8);
        CHECK(rep.lift_sign == expected_lift_sign(pg.spec));
        CHECK(pg.contractible == (rep.lift_sign > 0));
        const Geodesic geo(ed, params);
        if (pg.spec.m > 1) {
          CHECK((geo.rotation(pg.T) - Rotation::Identity()).norm() > 1e-3);
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  const SRParams params(0.8);
  const auto all = enumerate_periodic(params, 3, 2);
  CHECK(all.size() == 6);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].total_time <= all[i].total_time);
  }
  const auto c1 = enumerate_periodic(params, 3, 2, Region::C1);
  CHECK(c1.size() == 3);
  for (const auto& pg : c1) {
    CHECK(pg.spec.region == Region::C1);
    CHECK(pg.spec.n * 0.8 > pg.spec.m);
  }
  CHECK(enumerate_periodic(SRParams(0.3), 3, 1, Region::C1).empty());
  CHECK_THROWS_AS(enumerate_periodic(params, 0, 3), DomainError);
}

TEST_CASE("homotopy class from the winding of the Euler angles") {
  CHECK(expected_lift_sign({2, 1, Region::C1}) == 1);
  CHECK(expected_lift_sign({3, 2, Region::C1}) == -1);
  CHECK(expected_lift_sign({3, 1, Region::C2}) == 1);
  CHECK(expected_lift_sign({2, 1, Region::C2}) == -1);
  CHECK(expected_lift_sign({3, 2, Region::C2}) == -1);
}

TEST_CASE("equilibria are periodic") {
  const SRParams params(0.6);
  const Geodesic c4({1, 0, 0}, params);
  CHECK((c4.rotation(2 * pi) - Rotation::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(distance(c4.quaternion(2 * pi), -UnitQuaternion{}) < 1e-14);
  CHECK(distance(c4.quaternion(4 * pi), UnitQuaternion{}) < 1e-14);
  const double b = params.b();
  const Geodesic c5({0, -1, 0}, params);
  CHECK((c5.rotation(2 * pi / b) - Rotation::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(distance(c5.quaternion(2 * pi / b), -UnitQuaternion{}) < 1e-14);
}
