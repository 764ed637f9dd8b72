#pragma once

// Quaternions, so(3) and the double cover S^3 -> SO(3).
//
// Vectors of R^3, imaginary quaternions and so(3) are identified through
//   a1 A1 + a2 A2 + a3 A3  <->  a1 i + a2 j + a3 k  <->  (a1, a2, a3),
// with A1, A2, A3 the infinitesimal rotations about e1, e2, e3.

#include <Eigen/Dense>

namespace srgeo {

using Vec3 = Eigen::Vector3d;
/// Element of SO(3), acting on column vectors.
using Rotation = Eigen::Matrix3d;
/// Skew-symmetric matrix, element of so(3).
using SkewMatrix = Eigen::Matrix3d;

/// Unit quaternion q0 + q1 i + q2 j + q3 k.
struct UnitQuaternion {
  double q0 = 1.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  static UnitQuaternion identity() { return {}; }
  /// Normalises the four components; throws DomainError on a zero vector.
  static UnitQuaternion from_components(double q0, double q1, double q2, double q3);

  double norm() const;
  UnitQuaternion conjugate() const { return {q0, -q1, -q2, -q3}; }
  UnitQuaternion inverse() const { return conjugate(); }
  UnitQuaternion operator-() const { return {-q0, -q1, -q2, -q3}; }
  double operator[](int i) const;
};

/// Hamilton product, renormalised.
UnitQuaternion quat_mul(const UnitQuaternion& p, const UnitQuaternion& q);
inline UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
  return quat_mul(p, q);
}

/// Largest componentwise difference.
double distance(const UnitQuaternion& p, const UnitQuaternion& q);

Rotation quat_to_rotation(const UnitQuaternion& q);

/// cos(beta/2) + (axis/|axis|) sin(beta/2); throws DomainError for a zero axis.
UnitQuaternion axis_angle_quat(const Vec3& axis, double beta);

/// Half-angle quaternion of e^{angle A_i}, i in {1, 2, 3}.
UnitQuaternion basis_quat(int axis, double angle);

/// Basis element A_i of so(3), i in {1, 2, 3}.
SkewMatrix basis_matrix(int axis);

SkewMatrix hat(const Vec3& v);
Vec3 vee(const SkewMatrix& m);

/// Rotates an imaginary quaternion: vee-coordinates of q (0, v) q^{-1}.
Vec3 rotate(const UnitQuaternion& q, const Vec3& v);

/// Killing form -1/2 tr(hat(x) hat(y)); equals the Euclidean dot product.
double killing_inner(const Vec3& x, const Vec3& y);

/// e^{angle A_i}, closed form.
Rotation basis_rotation(int axis, double angle);
/// Same rotation from a (cos, sin) pair, avoiding a round trip through the angle.
Rotation basis_rotation(int axis, double cos_angle, double sin_angle);

/// Reflection-like involution I_i = e^{pi A_i}, exact diagonal matrix.
Rotation half_turn(int axis);

/// max |R^T R - Id| and |det R - 1|.
double orthogonality_defect(const Rotation& r);

}  // namespace srgeo
