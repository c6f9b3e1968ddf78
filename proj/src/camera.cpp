#include "rhwarp/camera.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

Mat3 max_abs_normalized(const Mat3& m) {
  Eigen::Index r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  return m / m(r, c);
}

}  // namespace

Camera::Camera(const Mat3& K, int width, int height) : K_(K), width_(width), height_(height) {
  if (width <= 0 || height <= 0) fail(ErrorKind::invalid_argument, "camera: raster size must be positive");
  if (!K.allFinite()) fail(ErrorKind::invalid_argument, "camera: K has non-finite entries");
  if (K(1, 0) != 0.0 || K(2, 0) != 0.0 || K(2, 1) != 0.0)
    fail(ErrorKind::invalid_argument, "camera: K must be upper triangular");
  if (K(2, 2) != 1.0) fail(ErrorKind::invalid_argument, "camera: K[2][2] must be 1");
  if (std::abs(K(0, 0) * K(1, 1)) < 1e-12) fail(ErrorKind::invalid_argument, "camera: K is singular");
  K_inv_ = K.inverse();
}

Camera Camera::pinhole(double fx, double fy, double cx, double cy, int width, int height) {
  Mat3 K;
  K << fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0;
  return Camera(K, width, height);
}

Vec2 Camera::to_pixel(const PlanePoint& u) const {
  const Vec3 p = K_ * Vec3(u.x(), u.y(), 1.0);
  return {p.x(), p.y()};
}

PlanePoint Camera::to_calibrated(const Vec2& pixel) const {
  const Vec3 u = K_inv_ * Vec3(pixel.x(), pixel.y(), 1.0);
  return {u.x(), u.y()};
}

Homography::Homography(const Mat3& h) : h_(h) {
  if (!h.allFinite() || h.cwiseAbs().maxCoeff() == 0.0)
    fail(ErrorKind::invalid_argument, "homography: matrix is zero or non-finite");
  if (std::abs(max_abs_normalized(h).determinant()) <= 1e-12)
    fail(ErrorKind::invalid_argument, "homography: matrix is singular");
}

Mat3 Homography::normalized() const { return max_abs_normalized(h_); }

PlanePoint project(const Vec3& x) {
  if (!(x.z() > 0.0)) {
    std::ostringstream os;
    os << "project: point (" << x.transpose() << ") is not in front of the camera";
    fail(ErrorKind::behind_camera, os.str());
  }
  return {x.x() / x.z(), x.y() / x.z()};
}

SpherePoint unproject(const PlanePoint& u) {
  return Vec3(u.x(), u.y(), 1.0) / std::sqrt(1.0 + u.squaredNorm());
}

Vec2 apply_homography(const Homography& H, const Vec2& p) {
  const Vec3 y = H.matrix() * Vec3(p.x(), p.y(), 1.0);
  if (std::abs(y.z()) < 1e-12) fail(ErrorKind::out_of_domain, "apply_homography: point maps to infinity");
  return {y.x() / y.z(), y.y() / y.z()};
}

Homography rotational_homography(const Camera& cam, const Rotation3& R_aug, const Camera& cam_out) {
  return Homography(cam_out.K() * R_aug.matrix() * cam.K_inv());
}

CameraPose relabel_pose(const CameraPose& pose, const Rotation3& R_aug) {
  return {R_aug * pose.R, pose.c};
}

ObjectPose object_pose_relabel(const ObjectPose& pose, const Rotation3& R_aug) {
  return {R_aug * pose.R, R_aug * pose.t};
}

Vec2 project_pixel(const Camera& cam, const CameraPose& pose, const Vec3& x) {
  return cam.to_pixel(project(pose.R * (x - pose.c)));
}

Vec2 project_pixel(const Camera& cam, const ObjectPose& pose, const Vec3& x) {
  return cam.to_pixel(project(pose.R * x + pose.t));
}

double projective_distance(const Mat3& a, const Mat3& b) {
  return (max_abs_normalized(a) - max_abs_normalized(b)).cwiseAbs().maxCoeff();
}

bool proportional(const Mat3& a, const Mat3& b, double tol) {
  return projective_distance(a, b) <= tol;
}

}  // namespace rhwarp
