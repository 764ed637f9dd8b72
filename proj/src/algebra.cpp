#include "srgeo/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

void require_axis(int axis) {
  if (axis < 1 || axis > 3) {
    throw DomainError("basis axis index must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

}  // namespace

UnitQuaternion UnitQuaternion::from_components(double q0, double q1, double q2, double q3) {
  const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("quaternion components must be finite and not all zero");
  }
  return {q0 / n, q1 / n, q2 / n, q3 / n};
}

double UnitQuaternion::norm() const { return std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3); }

double UnitQuaternion::operator[](int i) const {
  switch (i) {
    case 0: return q0;
    case 1: return q1;
    case 2: return q2;
    case 3: return q3;
    default: throw DomainError("quaternion component index must be 0..3");
  }
}

UnitQuaternion quat_mul(const UnitQuaternion& p, const UnitQuaternion& q) {
  const double w = p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3;
  const double x = p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2;
  const double y = p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1;
  const double z = p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0;
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return {w / n, x / n, y / n, z / n};
}

double distance(const UnitQuaternion& p, const UnitQuaternion& q) {
  return std::max({std::abs(p.q0 - q.q0), std::abs(p.q1 - q.q1), std::abs(p.q2 - q.q2),
                   std::abs(p.q3 - q.q3)});
}

Rotation quat_to_rotation(const UnitQuaternion& q) {
  const double a = q.q0, b = q.q1, c = q.q2, d = q.q3;
  Rotation r;
  r << a * a + b * b - c * c - d * d, 2.0 * (b * c - a * d), 2.0 * (a * c + b * d),
      2.0 * (b * c + a * d), a * a - b * b + c * c - d * d, 2.0 * (c * d - a * b),
      2.0 * (b * d - a * c), 2.0 * (c * d + a * b), a * a - b * b - c * c + d * d;
  return r;
}

UnitQuaternion axis_angle_quat(const Vec3& axis, double beta) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("rotation axis must be a finite nonzero vector");
  }
  const double s = std::sin(beta / 2.0) / n;
  return {std::cos(beta / 2.0), axis.x() * s, axis.y() * s, axis.z() * s};
}

UnitQuaternion basis_quat(int axis, double angle) {
  require_axis(axis);
  UnitQuaternion q{std::cos(angle / 2.0), 0.0, 0.0, 0.0};
  const double s = std::sin(angle / 2.0);
  if (axis == 1) q.q1 = s;
  if (axis == 2) q.q2 = s;
  if (axis == 3) q.q3 = s;
  return q;
}

SkewMatrix basis_matrix(int axis) {
  require_axis(axis);
  Vec3 e = Vec3::Zero();
  e[axis - 1] = 1.0;
  return hat(e);
}

SkewMatrix hat(const Vec3& v) {
  SkewMatrix m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

Vec3 vee(const SkewMatrix& m) { return {m(2, 1), m(0, 2), m(1, 0)}; }

Vec3 rotate(const UnitQuaternion& q, const Vec3& v) {
  // q v q^{-1} without normalisation of the pure quaternion.
  const Vec3 u(q.q1, q.q2, q.q3);
  const Vec3 t = 2.0 * u.cross(v);
  return v + q.q0 * t + u.cross(t);
}

double killing_inner(const Vec3& x, const Vec3& y) { return -0.5 * (hat(x) * hat(y)).trace(); }

Rotation basis_rotation(int axis, double angle) {
  return basis_rotation(axis, std::cos(angle), std::sin(angle));
}

Rotation basis_rotation(int axis, double c, double s) {
  require_axis(axis);
  Rotation r = Rotation::Identity();
  switch (axis) {
    case 1:
      r(1, 1) = c; r(1, 2) = -s;
      r(2, 1) = s; r(2, 2) = c;
      break;
    case 2:
      r(0, 0) = c; r(0, 2) = s;
      r(2, 0) = -s; r(2, 2) = c;
      break;
    default:
      r(0, 0) = c; r(0, 1) = -s;
      r(1, 0) = s; r(1, 1) = c;
      break;
  }
  return r;
}

Rotation half_turn(int axis) {
  require_axis(axis);
  Vec3 d(-1.0, -1.0, -1.0);
  d[axis - 1] = 1.0;
  return d.asDiagonal();
}

double orthogonality_defect(const Rotation& r) {
  const double ortho = (r.transpose() * r - Rotation::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(r.determinant() - 1.0));
}

}  // namespace srgeo
