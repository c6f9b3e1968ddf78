#pragma once

// Rigidity of image maps under camera motion.
//
// rigidity_witness() exhibits, for a rigid motion with nonzero translation,
// two points on one viewing ray whose images after the motion differ; no
// image-plane map can then realize the motion.
//
// sset_solve() describes the set of 3D points on which a fixed image
// translation tau agrees with a fixed rigid motion rho. With H the
// homogeneous matrix of tau the condition is lambda H x = R x + v for some
// real lambda: a curve (lambda H - R)^-1 v over all lambda that are not
// eigenvalues of H^-1 R, plus a line, plane or nothing at each eigenvalue.

#include <cstdint>
#include <optional>
#include <vector>

#include "rhwarp/camera.hpp"

namespace rhwarp {

struct RigidityWitness {
  Vec3 u = Vec3::Zero();
  double lambda = 2.0;
  double cross_norm = 0.0;  // |(1 - lambda)(R u) x v|
};

/// Throws ErrorKind::precondition when rho.v = 0 (pure rotations preserve
/// rigidity, so no witness exists).
RigidityWitness rigidity_witness(const RigidMotion& rho, std::uint64_t seed = 0);

enum class SetKind { line, plane, empty };

const char* to_string(SetKind kind);

struct EigenCase {
  double lambda = 0.0;
  SetKind kind = SetKind::empty;
  int rank = 0;                    // rank of lambda H - R
  std::optional<Vec3> basepoint;   // minimal-norm solution when solvable
  std::vector<Vec3> directions;    // orthonormal kernel basis (0 to 2 vectors)
};

struct CurveSample {
  double lambda = 0.0;
  Vec3 point = Vec3::Zero();
};

struct SSetResult {
  Vec2 tau = Vec2::Zero();
  RigidMotion rho;
  std::vector<double> eigenvalues;  // real eigenvalues of H^-1 R, ascending
  std::vector<EigenCase> cases;
  std::vector<CurveSample> curve;

  /// (lambda H - R)^-1 v; ErrorKind::degenerate at an eigenvalue.
  Vec3 curve_at(double lambda) const;

  /// Distance from x to the union of the curve and the eigenvalue sets.
  double distance_to(const Vec3& x) const;
};

/// [I tau; 0 1]
Mat3 translation_homography(const Vec2& tau);

/// Real roots of x^3 + a x^2 + b x + c, ascending, multiple roots reported
/// once. Closed form followed by two Newton steps.
std::vector<double> real_cubic_roots(double a, double b, double c);

/// Rank threshold relative to the largest singular value.
inline constexpr double kSSetRankTol = 1e-9;

/// Throws ErrorKind::precondition for tau = 0.
SSetResult sset_solve(const Vec2& tau, const RigidMotion& rho);

/// |tau + pi(x) - pi(rho(x))| with projective dehomogenization (sign of the
/// third coordinate is not restricted). Returns +inf where either point is
/// at infinity.
double sset_residual(const Vec2& tau, const RigidMotion& rho, const Vec3& x);

struct GridCheck {
  std::size_t tested = 0;
  std::size_t satisfying = 0;
  double max_distance = 0.0;
  Vec3 worst = Vec3::Zero();
};

/// Brute-force cover check: every point of an n^3 grid over [-extent,
/// extent]^3 with x2 > 0.01 whose residual is below eq_tol is measured
/// against the reported sets.
GridCheck sset_grid_check(const SSetResult& result, int n = 101, double extent = 5.0,
                          double eq_tol = 1e-6);

}  // namespace rhwarp
