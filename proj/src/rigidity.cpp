#include "rhwarp/rigidity.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double cubic_at(double a, double b, double c, double x) { return ((x + a) * x + b) * x + c; }

double cubic_slope(double a, double b, double x) { return (3.0 * x + 2.0 * a) * x + b; }

double distance_to_affine(const Vec3& x, const Vec3& base, const std::vector<Vec3>& dirs) {
  Vec3 d = x - base;
  for (const Vec3& e : dirs) d -= d.dot(e) * e;
  return d.norm();
}

}  // namespace

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::line: return "line";
    case SetKind::plane: return "plane";
    case SetKind::empty: return "empty";
  }
  return "unknown";
}

RigidityWitness rigidity_witness(const RigidMotion& rho, std::uint64_t seed) {
  const double vn = rho.v.norm();
  if (vn == 0.0) fail(ErrorKind::precondition, "rigidity_witness: pure rotation, no witness exists");
  const Vec3 vhat = rho.v / vn;

  std::vector<Vec3> candidates = {
      kE2,
      (kE0 + kE2).normalized(),
      (kE1 + kE2).normalized(),
      (-kE0 + kE2).normalized(),
      (-kE1 + kE2).normalized(),
  };
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 64; ++i) {
    Vec3 u(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0, unit_uniform(rng) + 0.05);
    candidates.push_back(u.normalized());
  }

  // First candidate whose ray direction after rotation makes a clear angle
  // with the translation; otherwise the best one seen.
  constexpr double kMinSine = 0.1;
  Vec3 best = candidates.front();
  double best_sine = -1.0;
  for (const Vec3& u : candidates) {
    const double sine = (rho.R * u).cross(vhat).norm();
    if (sine > best_sine) {
      best_sine = sine;
      best = u;
    }
    if (sine >= kMinSine) break;
  }

  RigidityWitness w;
  w.u = best;
  w.lambda = 2.0;
  w.cross_norm = ((1.0 - w.lambda) * (rho.R * w.u)).cross(rho.v).norm();
  return w;
}

Mat3 translation_homography(const Vec2& tau) {
  Mat3 h = Mat3::Identity();
  h(0, 2) = tau.x();
  h(1, 2) = tau.y();
  return h;
}

std::vector<double> real_cubic_roots(double a, double b, double c) {
  // Depressed cubic t^3 + p t + q with x = t - a/3.
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double hq = q / 2.0;
  const double tp = p / 3.0;
  const double disc = hq * hq + tp * tp * tp;
  const double scale = hq * hq + std::abs(tp * tp * tp);

  std::vector<double> t;
  if (scale == 0.0 || std::abs(disc) <= 1e-12 * scale) {
    if (std::abs(p) <= 1e-14 * std::max(1.0, a * a)) {
      t = {0.0};
    } else {
      t = {3.0 * q / p, -1.5 * q / p};
    }
  } else if (disc > 0.0) {
    const double s = std::sqrt(disc);
    t = {std::cbrt(-hq + s) + std::cbrt(-hq - s)};
  } else {
    const double m = 2.0 * std::sqrt(-tp);
    const double phi = std::acos(std::clamp(-hq / std::sqrt(-tp * tp * tp), -1.0, 1.0)) / 3.0;
    for (int k = 0; k < 3; ++k) t.push_back(m * std::cos(phi - 2.0 * kPi * k / 3.0));
  }

  std::vector<double> roots;
  for (double ti : t) {
    double x = ti - shift;
    for (int it = 0; it < 2; ++it) {
      const double d = cubic_slope(a, b, x);
      if (d == 0.0) break;
      const double step = cubic_at(a, b, c, x) / d;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 1e-7 * std::max(1.0, std::abs(r)))
      unique.push_back(r);
  }
  return unique;
}

Vec3 SSetResult::curve_at(double lambda) const {
  const Mat3 m = lambda * translation_homography(tau) - rho.R.matrix();
  Eigen::FullPivLU<Mat3> lu(m);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) fail(ErrorKind::degenerate, "curve_at: lambda is an eigenvalue");
  return lu.solve(rho.v);
}

double SSetResult::distance_to(const Vec3& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const EigenCase& ec : cases) {
    if (ec.kind == SetKind::empty || !ec.basepoint) continue;
    best = std::min(best, distance_to_affine(x, *ec.basepoint, ec.directions));
  }
  // On the curve, lambda is fixed by the third row: lambda x2 = (R x + v)_2.
  if (x.z() != 0.0) {
    const double lambda = rho(x).z() / x.z();
    bool near_eigen = false;
    for (double m : eigenvalues) near_eigen |= std::abs(lambda - m) < 1e-9 * std::max(1.0, std::abs(m));
    if (!near_eigen) best = std::min(best, (x - curve_at(lambda)).norm());
  }
  for (const CurveSample& s : curve) best = std::min(best, (x - s.point).norm());
  return best;
}

SSetResult sset_solve(const Vec2& tau, const RigidMotion& rho) {
  if (tau.norm() == 0.0) fail(ErrorKind::precondition, "sset_solve: tau must be nonzero");

  SSetResult out;
  out.tau = tau;
  out.rho = rho;

  const Mat3 H = translation_homography(tau);
  const Mat3& R = rho.R.matrix();
  const Mat3 A = H.inverse() * R;
  const double c2 = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) + A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0) +
                    A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
  out.eigenvalues = real_cubic_roots(-A.trace(), c2, -A.determinant());

  for (double lambda : out.eigenvalues) {
    const Mat3 M = lambda * H - R;
    Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vec3 sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < 3; ++i) rank += sv(i) > kSSetRankTol * sv(0) ? 1 : 0;
    if (rank == 3) continue;

    EigenCase ec;
    ec.lambda = lambda;
    ec.rank = rank;
    Vec3 x = Vec3::Zero();
    const Vec3 utv = svd.matrixU().transpose() * rho.v;
    for (int i = 0; i < rank; ++i) x += (utv(i) / sv(i)) * svd.matrixV().col(i);
    const double residual = (M * x - rho.v).norm();
    for (int i = rank; i < 3; ++i) ec.directions.push_back(svd.matrixV().col(i));
    if (residual <= kSSetRankTol * std::max(1.0, sv(0)) * std::max(1.0, rho.v.norm())) {
      ec.basepoint = x;
      ec.kind = rank == 2 ? SetKind::line : SetKind::plane;
    } else {
      ec.kind = SetKind::empty;
    }
    out.cases.push_back(std::move(ec));
  }

  // Symmetric log-spaced lambda grid on [-1e3, 1e3]: 0 and +-10^k for 1000
  // exponents k in [-3, 3], minus a 1e-4 neighbourhood of each eigenvalue.
  constexpr int kHalf = 1000;
  std::vector<double> lambdas = {0.0};
  for (int i = 0; i < kHalf; ++i) {
    const double v = std::pow(10.0, -3.0 + 6.0 * i / (kHalf - 1));
    lambdas.push_back(v);
    lambdas.push_back(-v);
  }
  std::sort(lambdas.begin(), lambdas.end());
  for (double lambda : lambdas) {
    bool skip = false;
    for (double m : out.eigenvalues) skip |= std::abs(lambda - m) < 1e-4;
    if (skip) continue;
    out.curve.push_back({lambda, out.curve_at(lambda)});
  }
  return out;
}

double sset_residual(const Vec2& tau, const RigidMotion& rho, const Vec3& x) {
  const Vec3 y = rho(x);
  if (std::abs(x.z()) < 1e-12 || std::abs(y.z()) < 1e-12) return std::numeric_limits<double>::infinity();
  const Vec2 lhs(x.x() / x.z() + tau.x(), x.y() / x.z() + tau.y());
  const Vec2 rhs(y.x() / y.z(), y.y() / y.z());
  return (lhs - rhs).norm();
}

GridCheck sset_grid_check(const SSetResult& result, int n, double extent, double eq_tol) {
  GridCheck gc;
  const double step = n > 1 ? 2.0 * extent / (n - 1) : 0.0;
  for (int k = 0; k < n; ++k) {
    const double z = -extent + step * k;
    if (!(z > 0.01)) continue;
    for (int j = 0; j < n; ++j) {
      const double y = -extent + step * j;
      for (int i = 0; i < n; ++i) {
        const Vec3 x(-extent + step * i, y, z);
        ++gc.tested;
        if (!(sset_residual(result.tau, result.rho, x) < eq_tol)) continue;
        ++gc.satisfying;
        const double d = result.distance_to(x);
        if (d > gc.max_distance) {
          gc.max_distance = d;
          gc.worst = x;
        }
      }
    }
  }
  return gc;
}

}  // namespace rhwarp
