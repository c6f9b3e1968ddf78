#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace rhwarp {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Calibrated image coordinates: the image plane is x2 = 1.
using PlanePoint = Vec2;

/// Point on the unit sphere S^2. Unit norm is a caller invariant.
using SpherePoint = Vec3;

inline const Vec3 kE0{1.0, 0.0, 0.0};
inline const Vec3 kE1{0.0, 1.0, 0.0};
inline const Vec3 kE2{0.0, 0.0, 1.0};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace rhwarp
