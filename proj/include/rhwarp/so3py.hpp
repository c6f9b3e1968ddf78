#pragma once

// SO(3) and pitch-yaw (PY) algebra.
//
// A PYVec alpha stands for the skew matrix a0*C0 + a1*C1 where C0, C1 are the
// cross-product matrices of e0 and e1. exp_py(alpha) is the rotation about
// the axis (a0, a1, 0) by |alpha|; it moves the optical axis e2 along a great
// circle at constant speed |alpha|.
//
// Two planar conventions meet here. The Lie-algebra convention above (used
// by every PYVec) and the image-aligned "warp" convention q = (a1, -a0) used
// for PY rasters: q has the same polar angle as the calibrated image point
// it corresponds to. warp_coords()/from_warp_coords() convert between them.

#include <Eigen/Core>

#include "rhwarp/types.hpp"

namespace rhwarp {

struct PYVec {
  double a0 = 0.0;
  double a1 = 0.0;

  double norm() const;
  Vec2 vec() const { return {a0, a1}; }
  static PYVec from(const Vec2& v) { return {v.x(), v.y()}; }

  friend PYVec operator+(PYVec a, PYVec b) { return {a.a0 + b.a0, a.a1 + b.a1}; }
  friend PYVec operator-(PYVec a, PYVec b) { return {a.a0 - b.a0, a.a1 - b.a1}; }
  friend PYVec operator*(double s, PYVec a) { return {s * a.a0, s * a.a1}; }
  friend bool operator==(PYVec a, PYVec b) = default;
};

/// Orthonormal 3x3 matrix with determinant +1.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::Identity()) {}

  /// Throws ErrorKind::invalid_argument unless m is a rotation to `tol`.
  static Rotation3 from_matrix(const Mat3& m, double tol = 1e-9);

  /// Closest rotation in the Frobenius sense; rejects matrices further than
  /// `tol` from SO(3) so that typos in input files do not get "repaired".
  static Rotation3 nearest(const Mat3& m, double tol = 1e-4);

  /// Rotation by `angle` radians about unit `axis` (Rodrigues).
  static Rotation3 axis_angle(const Vec3& axis, double angle);

  const Mat3& matrix() const { return m_; }
  Rotation3 transpose() const { return Rotation3(m_.transpose()); }

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
    return Rotation3(a.m_ * b.m_);
  }
  friend Vec3 operator*(const Rotation3& r, const Vec3& v) { return r.m_ * v; }

  /// max(|m^T m - I|_inf, |det m - 1|)
  static double orthonormality_error(const Mat3& m);

 private:
  explicit Rotation3(const Mat3& m) : m_(m) {}
  friend Rotation3 exp_py(PYVec alpha);
  Mat3 m_;
};

Mat3 skew(const Vec3& v);

/// a0*C0 + a1*C1
Mat3 py_matrix(PYVec alpha);

/// Matrix exponential of a0*C0 + a1*C1 in closed form.
Rotation3 exp_py(PYVec alpha);

/// exp_py(alpha) * e2, without forming the matrix.
SpherePoint exp_py_e2(PYVec alpha);

/// The unique alpha with |alpha| < pi and exp_py(alpha) e2 = theta.
/// Throws ErrorKind::degenerate for theta = -e2.
PYVec min_py_log(const SpherePoint& theta);

/// Element of N x S^2: crossing count of {+-e2} and endpoint.
struct IndexedSpherePoint {
  int n = 0;
  SpherePoint p = kE2;
};

/// Lift of PY to N x S^2: (floor(|alpha| / pi), exp_py(alpha) e2).
/// Throws ErrorKind::non_injective when |alpha| is a positive multiple of pi.
IndexedSpherePoint phi_map(PYVec alpha);

/// Inverse of phi_map. Throws ErrorKind::degenerate when s.p = +-e2 has no
/// unique preimage, ErrorKind::invalid_argument for n < 0.
PYVec phi_inverse(const IndexedSpherePoint& s);

/// pi(exp_py(alpha) e2) for |alpha| < pi/2, i.e. radius tan|alpha| at polar
/// angle arg(alpha) - pi/2. Throws ErrorKind::out_of_domain otherwise.
PlanePoint py_to_plane(PYVec alpha);

/// Inverse of py_to_plane (radius arctan|u|).
PYVec plane_to_py(const PlanePoint& u);

/// Lie-algebra PY vector -> image-aligned warp coordinates (a1, -a0).
Vec2 warp_coords(PYVec alpha);
/// Image-aligned warp coordinates -> Lie-algebra PY vector.
PYVec from_warp_coords(const Vec2& q);

/// Radial remap between warp coordinates and calibrated coordinates:
/// u = tan|q| / |q| * q (requires |q| < pi/2) and its inverse.
PlanePoint warp_to_plane(const Vec2& q);
Vec2 plane_to_warp(const PlanePoint& u);

/// Great-circle distance on S^2 between unit vectors.
double sphere_distance(const SpherePoint& a, const SpherePoint& b);

}  // namespace rhwarp
