#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle/oracles.hpp"
#include "srgeo/algebra.hpp"
#include "srgeo/errors.hpp"

using namespace srgeo;
using std::numbers::pi;

namespace {

UnitQuaternion random_quat(oracle::Draws& rng) {
  return UnitQuaternion::from_components(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                         rng.uniform(-1, 1));
}

double max_abs(const Eigen::Matrix3d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("basis rotations") {
  Rotation rz;
  rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(max_abs(basis_rotation(3, pi / 2) - rz) < 1e-15);
  CHECK(max_abs(basis_rotation(1, pi) - half_turn(1)) < 1e-15);
  CHECK(half_turn(2) == Eigen::Vector3d(-1, 1, -1).asDiagonal().toDenseMatrix());
  for (int axis = 1; axis <= 3; ++axis) {
    for (double th : {-2.0, 0.3, 4.4}) {
      CHECK(max_abs(basis_rotation(axis, th) - basis_rotation(axis, std::cos(th), std::sin(th))) < 1e-15);
      CHECK(max_abs(quat_to_rotation(basis_quat(axis, th)) - basis_rotation(axis, th)) < 1e-15);
      // e^{th A} = I + sin th A + (1 - cos th) A^2
      const SkewMatrix A = basis_matrix(axis);
      const Rotation series = Rotation::Identity() + std::sin(th) * A + (1 - std::cos(th)) * A * A;
      CHECK(max_abs(series - basis_rotation(axis, th)) < 1e-15);
    }
    CHECK(max_abs(half_turn(axis) * half_turn(axis) - Rotation::Identity()) == 0.0);
  }
  CHECK_THROWS_AS(basis_rotation(4, 0.1), DomainError);
  CHECK_THROWS_AS(basis_quat(0, 0.1), DomainError);
}

TEST_CASE("hat and vee") {
  const Vec3 v(0.3, -1.2, 2.5), w(1.0, 0.4, -0.7);
  CHECK(max_abs(hat(v) + hat(v).transpose()) == 0.0);
  CHECK((vee(hat(v)) - v).norm() == 0.0);
  CHECK((hat(v) * w - v.cross(w)).norm() < 1e-15);
  CHECK(killing_inner(v, w) == doctest::Approx(v.dot(w)).epsilon(1e-15));
  CHECK(max_abs(hat(Vec3::UnitX()) - basis_matrix(1)) == 0.0);
  // [A1, A2] = A3
  const SkewMatrix c = basis_matrix(1) * basis_matrix(2) - basis_matrix(2) * basis_matrix(1);
  CHECK(max_abs(c - basis_matrix(3)) == 0.0);
}

TEST_CASE("quaternion products") {
  const UnitQuaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(distance(i * j, k) == 0.0);
  CHECK(distance(j * k, i) == 0.0);
  CHECK(distance(i * i, -UnitQuaternion{}) == 0.0);
  CHECK(i[1] == 1.0);
  CHECK_THROWS_AS(UnitQuaternion::from_components(0, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(axis_angle_quat(Vec3::Zero(), 1.0), DomainError);
  CHECK(distance(axis_angle_quat(Vec3(0, 0, 2), 0.8), basis_quat(3, 0.8)) < 1e-16);
}

TEST_CASE("double cover is a homomorphism") {
  oracle::Draws rng(3);
  for (int n = 0; n < 500; ++n) {
    const UnitQuaternion p = random_quat(rng), q = random_quat(rng);
    const Rotation Rp = quat_to_rotation(p), Rq = quat_to_rotation(q);
    CHECK(max_abs(quat_to_rotation(p * q) - Rp * Rq) < 1e-14);
    CHECK(max_abs(quat_to_rotation(-p) - Rp) < 1e-15);
    CHECK(orthogonality_defect(Rp) < 1e-14);
    CHECK(std::abs((p * p.conjugate()).q0 - 1.0) < 1e-15);
    CHECK(std::abs((p * q).norm() - 1.0) < 1e-15);
    const Vec3 v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    CHECK((rotate(p, v) - Rp * v).norm() < 1e-14);
  }
}

TEST_CASE("orthogonality defect") {
  CHECK(orthogonality_defect(Rotation::Identity()) == 0.0);
  CHECK(orthogonality_defect(-Rotation::Identity()) == doctest::Approx(2.0));
  Rotation r = basis_rotation(2, 0.4);
  r(0, 0) += 1e-6;
  CHECK(orthogonality_defect(r) > 1e-7);
}
