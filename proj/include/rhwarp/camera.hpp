#pragma once

// Pinhole camera geometry: projection onto the plane x2 = 1, unprojection to
// the upper hemisphere, homographies and pose relabeling under rotational
// homographies H = K' R K^-1.
//
// All geometry runs in calibrated coordinates; K appears only where pixels
// enter or leave.

#include "rhwarp/so3py.hpp"
#include "rhwarp/types.hpp"

namespace rhwarp {

class Camera {
 public:
  /// Validates K (upper triangular, K22 = 1, invertible) and the raster size.
  Camera(const Mat3& K, int width, int height);

  /// fx, fy, principal point (cx, cy), zero skew.
  static Camera pinhole(double fx, double fy, double cx, double cy, int width, int height);

  const Mat3& K() const { return K_; }
  const Mat3& K_inv() const { return K_inv_; }
  int width() const { return width_; }
  int height() const { return height_; }
  Vec2 principal_point() const { return {K_(0, 2), K_(1, 2)}; }

  Vec2 to_pixel(const PlanePoint& u) const;
  PlanePoint to_calibrated(const Vec2& pixel) const;

 private:
  Mat3 K_;
  Mat3 K_inv_;
  int width_;
  int height_;
};

/// Projective map of P^2, stored unnormalized.
class Homography {
 public:
  Homography() : h_(Mat3::Identity()) {}
  /// Throws ErrorKind::invalid_argument when singular (|det| <= 1e-12 after
  /// scaling the max-abs entry to 1).
  explicit Homography(const Mat3& h);

  const Mat3& matrix() const { return h_; }
  /// Scaled so the max-abs entry is 1 (sign kept).
  Mat3 normalized() const;
  Homography inverse() const { return Homography(h_.inverse()); }

  friend Homography operator*(const Homography& a, const Homography& b) {
    return Homography(a.h_ * b.h_);
  }

 private:
  Mat3 h_;
};

/// x -> R x + v
struct RigidMotion {
  Rotation3 R;
  Vec3 v = Vec3::Zero();

  Vec3 operator()(const Vec3& x) const { return R * x + v; }
};

/// World-to-camera rotation R and camera centre c: lambda y = K R [I -c] x.
struct CameraPose {
  Rotation3 R;
  Vec3 c = Vec3::Zero();
};

/// Object pose in the camera frame: x_cam = R x_obj + t.
struct ObjectPose {
  Rotation3 R;
  Vec3 t = Vec3::Zero();
};

/// (x0/x2, x1/x2); ErrorKind::behind_camera unless x2 > 0.
PlanePoint project(const Vec3& x);

/// (u0, u1, 1) / sqrt(1 + |u|^2)
SpherePoint unproject(const PlanePoint& u);

/// Dehomogenized image of a pixel; ErrorKind::out_of_domain when it maps to
/// the line at infinity.
Vec2 apply_homography(const Homography& H, const Vec2& p);

/// H = K' R_aug K^-1 with K from `cam`, K' from `cam_out`.
Homography rotational_homography(const Camera& cam, const Rotation3& R_aug, const Camera& cam_out);

/// (R_aug R, c)
CameraPose relabel_pose(const CameraPose& pose, const Rotation3& R_aug);

/// (R_aug R_obj, R_aug t_obj). The object points seen through the rotated
/// camera project exactly onto the H-warp of their original projections.
ObjectPose object_pose_relabel(const ObjectPose& pose, const Rotation3& R_aug);

/// Pixel of world point x: K R (x - c), dehomogenized. Requires the point to
/// be in front of the camera.
Vec2 project_pixel(const Camera& cam, const CameraPose& pose, const Vec3& x);

/// Pixel of object point x under an object pose.
Vec2 project_pixel(const Camera& cam, const ObjectPose& pose, const Vec3& x);

/// True when a and b are equal up to a nonzero scale: both are normalized by
/// their max-abs entry (sign aligned) and compared entrywise.
bool proportional(const Mat3& a, const Mat3& b, double tol);

/// Entrywise distance between a and b after the normalization of proportional().
double projective_distance(const Mat3& a, const Mat3& b);

}  // namespace rhwarp
