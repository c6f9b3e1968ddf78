#include "rhwarp/so3py.hpp"

#include <Eigen/Geometry>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

// Below this angle the Rodrigues coefficients are evaluated by their Taylor
// series; the closed forms lose all digits to cancellation near zero.
constexpr double kSmallAngle = 1e-6;

double sinc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

// (1 - cos x) / x^2
double cosc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 0.5 - x2 / 24.0 + x2 * x2 / 720.0 - x2 * x2 * x2 / 40320.0;
  }
  return (1.0 - std::cos(x)) / (x * x);
}

// tan(x) / x
double tanc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 + x2 / 3.0 + 2.0 * x2 * x2 / 15.0 + 17.0 * x2 * x2 * x2 / 315.0;
  }
  return std::tan(x) / x;
}

// atan(x) / x
double atanc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + x2 * x2 / 5.0 - x2 * x2 * x2 / 7.0;
  }
  return std::atan(x) / x;
}

}  // namespace

double PYVec::norm() const { return std::hypot(a0, a1); }

double Rotation3::orthonormality_error(const Mat3& m) {
  const double ortho = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(m.determinant() - 1.0));
}

Rotation3 Rotation3::from_matrix(const Mat3& m, double tol) {
  if (!m.allFinite() || orthonormality_error(m) > tol) {
    std::ostringstream os;
    os << "matrix is not a rotation (error " << orthonormality_error(m) << ")";
    fail(ErrorKind::invalid_argument, os.str());
  }
  return Rotation3(m);
}

Rotation3 Rotation3::nearest(const Mat3& m, double tol) {
  if (!m.allFinite() || orthonormality_error(m) > tol) {
    std::ostringstream os;
    os << "matrix is too far from SO(3) (error " << orthonormality_error(m) << ")";
    fail(ErrorKind::invalid_argument, os.str());
  }
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  d(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0 ? -1.0 : 1.0;
  return Rotation3(svd.matrixU() * d * svd.matrixV().transpose());
}

Rotation3 Rotation3::axis_angle(const Vec3& axis, double angle) {
  const Vec3 n = axis.normalized();
  const Mat3 w = skew(n);
  return Rotation3(Mat3::Identity() + std::sin(angle) * w + (1.0 - std::cos(angle)) * w * w);
}

Mat3 skew(const Vec3& v) {
  Mat3 s;
  s << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return s;
}

Mat3 py_matrix(PYVec alpha) { return skew(Vec3(alpha.a0, alpha.a1, 0.0)); }

Rotation3 exp_py(PYVec alpha) {
  const double r = alpha.norm();
  const Mat3 w = py_matrix(alpha);
  return Rotation3(Mat3::Identity() + sinc(r) * w + cosc(r) * (w * w));
}

SpherePoint exp_py_e2(PYVec alpha) {
  const double r = alpha.norm();
  const double s = sinc(r);
  return {s * alpha.a1, -s * alpha.a0, std::cos(r)};
}

PYVec min_py_log(const SpherePoint& theta) {
  const double s = std::hypot(theta.x(), theta.y());
  if (s <= 1e-15) {
    if (theta.z() > 0.0) return {};
    fail(ErrorKind::degenerate, "min_py_log: antipode -e2 has no unique minimal log");
  }
  const double r = std::atan2(s, theta.z());
  const double k = r / s;
  // exp_py(alpha) e2 = sin|alpha| / |alpha| * (a1, -a0) in its first two slots.
  return {-theta.y() * k, theta.x() * k};
}

IndexedSpherePoint phi_map(PYVec alpha) {
  const double r = alpha.norm();
  const double turns = std::round(r / kPi);
  if (turns >= 1.0 && std::abs(r - turns * kPi) <= 1e-12 * std::max(1.0, r)) {
    std::ostringstream os;
    os << "phi_map: |alpha| = " << r << " is a multiple of pi";
    fail(ErrorKind::non_injective, os.str());
  }
  return {static_cast<int>(std::floor(r / kPi)), exp_py_e2(alpha)};
}

PYVec phi_inverse(const IndexedSpherePoint& s) {
  if (s.n < 0) fail(ErrorKind::invalid_argument, "phi_inverse: negative crossing count");
  if (std::hypot(s.p.x(), s.p.y()) <= 1e-15) {
    if (s.n == 0 && s.p.z() > 0.0) return {};
    fail(ErrorKind::degenerate, "phi_inverse: pole has no unique preimage");
  }
  const PYVec base = min_py_log(s.p);
  const double r0 = base.norm();
  const PYVec dir = (1.0 / r0) * base;
  // Each extra crossing adds half a revolution; odd counts approach the
  // endpoint from the far side of the great circle.
  if (s.n % 2 == 0) return (s.n * kPi + r0) * dir;
  return (-((s.n + 1) * kPi - r0)) * dir;
}

PlanePoint py_to_plane(PYVec alpha) {
  const double r = alpha.norm();
  if (!(r < kPi / 2)) {
    std::ostringstream os;
    os << "py_to_plane: |alpha| = " << r << " leaves the upper hemisphere";
    fail(ErrorKind::out_of_domain, os.str());
  }
  const double f = tanc(r);
  return {f * alpha.a1, -f * alpha.a0};
}

PYVec plane_to_py(const PlanePoint& u) {
  const double g = atanc(u.norm());
  return {-g * u.y(), g * u.x()};
}

Vec2 warp_coords(PYVec alpha) { return {alpha.a1, -alpha.a0}; }

PYVec from_warp_coords(const Vec2& q) { return {-q.y(), q.x()}; }

PlanePoint warp_to_plane(const Vec2& q) {
  const double r = q.norm();
  if (!(r < kPi / 2)) fail(ErrorKind::out_of_domain, "warp_to_plane: |q| >= pi/2");
  return tanc(r) * q;
}

Vec2 plane_to_warp(const PlanePoint& u) { return atanc(u.norm()) * u; }

double sphere_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace rhwarp
