#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/rigidity.hpp"
#include "rhwarp/synth.hpp"

using namespace rhwarp;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

double cubic(double a, double b, double c, double x) { return x * x * x + a * x * x + b * x + c; }

}  // namespace

TEST_CASE("witness: R = I, v = e0") {
  const RigidMotion rho{Rotation3(), kE0};
  const RigidityWitness w = rigidity_witness(rho);
  CHECK(w.u == kE2);
  CHECK(w.lambda == 2.0);
  CHECK(rho(w.u) == Vec3(1, 0, 1));
  CHECK(rho(w.lambda * w.u) == Vec3(1, 0, 2));
  CHECK(oracle::proj(rho(w.u)) == Vec2(1, 0));
  CHECK(oracle::proj(rho(w.lambda * w.u)) == Vec2(0.5, 0));
  CHECK(w.cross_norm == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("witness: pure rotation has none") {
  CHECK(throws_kind([] { rigidity_witness(RigidMotion{Rotation3::axis_angle(kE0, 0.3), Vec3::Zero()}); },
                    ErrorKind::precondition));
}

TEST_CASE("witness: 1000 random motions") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const RigidMotion rho{rng.rotation(), rng.direction() * rng.uniform(1e-3, 10)};
    const RigidityWitness w = rigidity_witness(rho, static_cast<std::uint64_t>(i));
    CHECK(w.lambda != 1.0);
    // Brute force: the two moved points must be non-collinear.
    const double cross = rho(w.u).cross(rho(w.lambda * w.u)).norm();
    CHECK(cross > 1e-6);
    CHECK(std::abs(cross - w.cross_norm) <= 1e-9 * cross);
  }
}

TEST_CASE("real_cubic_roots") {
  auto r = real_cubic_roots(-3, 3, -1);  // (x - 1)^3
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
  r = real_cubic_roots(-6, 11, -6);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-14));
  r = real_cubic_roots(1, -1, -1);  // (x + 1)^2 (x - 1)
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-14));
  r = real_cubic_roots(0, 1, 1);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(cubic(0, 1, 1, r[0])) < 1e-15);
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double x1 = rng.uniform(-5, 5), x2 = rng.uniform(-5, 5), x3 = rng.uniform(-5, 5);
    const double a = -(x1 + x2 + x3), b = x1 * x2 + x1 * x3 + x2 * x3, c = -x1 * x2 * x3;
    for (double root : real_cubic_roots(a, b, c))
      CHECK(std::min({std::abs(root - x1), std::abs(root - x2), std::abs(root - x3)}) < 1e-6);
  }
}

TEST_CASE("S-set: tau = (1,0), R = I, v = e0") {
  const SSetResult r = sset_solve(Vec2(1, 0), RigidMotion{Rotation3(), kE0});
  REQUIRE(r.eigenvalues.size() == 1);
  CHECK(r.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(r.cases.size() == 1);
  const EigenCase& c = r.cases[0];
  CHECK(c.kind == SetKind::plane);
  CHECK(c.rank == 1);
  REQUIRE(c.basepoint);
  CHECK(c.basepoint->z() == doctest::Approx(1.0).epsilon(1e-14));
  REQUIRE(c.directions.size() == 2);
  for (const Vec3& d : c.directions) CHECK(std::abs(d.z()) < 1e-12);
  CHECK(r.curve.size() == 2001);
  for (const CurveSample& s : r.curve) {
    const Vec3 expect(1.0 / (s.lambda - 1.0), 0, 0);
    CHECK((s.point - expect).norm() <= 1e-12 * std::max(1.0, expect.norm()));
    CHECK(std::abs(s.lambda - 1.0) >= 1e-4);
  }
  const GridCheck gc = sset_grid_check(r, 101, 5.0, 1e-6);
  CHECK(gc.satisfying >= 101u * 101u);
  CHECK(gc.max_distance <= 1e-4);
}

TEST_CASE("S-set: tau = (1,0), R = I, v = e1") {
  const SSetResult r = sset_solve(Vec2(1, 0), RigidMotion{Rotation3(), kE1});
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].kind == SetKind::empty);
  CHECK_FALSE(r.cases[0].basepoint);
  for (const CurveSample& s : r.curve) {
    const Vec3 expect(0, 1.0 / (s.lambda - 1.0), 0);
    CHECK((s.point - expect).norm() <= 1e-12 * std::max(1.0, expect.norm()));
  }
}

TEST_CASE("S-set: tau = 0 rejected") {
  CHECK(throws_kind([] { sset_solve(Vec2(0, 0), RigidMotion{Rotation3(), kE0}); }, ErrorKind::precondition));
}

TEST_CASE("S-set: curve against Cramer's rule and the defining equation") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Vec2 tau(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const RigidMotion rho{rng.rotation(), rng.direction()};
    const SSetResult r = sset_solve(tau, rho);
    CHECK(r.eigenvalues.size() <= 3);
    Mat3 H = Mat3::Identity();
    H(0, 2) = tau.x();
    H(1, 2) = tau.y();
    for (std::size_t k = 0; k < r.curve.size(); k += 50) {
      const CurveSample& s = r.curve[k];
      const Vec3 x = oracle::cramer(s.lambda * H - rho.R.matrix(), rho.v);
      CHECK((s.point - x).norm() <= 1e-8 * std::max(1.0, x.norm()));
      if (x.z() > 1e-2 && std::abs(rho(x).z()) > 1e-2 && x.norm() < 1e3)
        CHECK(sset_residual(tau, rho, s.point) < 1e-8 * std::max(1.0, oracle::proj(x).norm()));
    }
    // Eigenvalues are roots of det(lambda H - R).
    for (double m : r.eigenvalues) CHECK(std::abs((m * H - rho.R.matrix()).determinant()) < 1e-9);
  }
}

TEST_CASE("S-set: rank-1 kernels are span(e0, e1)") {
  Rng rng(4);
  int seen = 0;
  for (int i = 0; i < 200; ++i) {
    const Vec2 tau(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const RigidMotion rho{Rotation3::axis_angle(kE2, i % 2 ? 0.0 : rng.uniform(-kPi, kPi)), rng.direction()};
    for (const EigenCase& c : sset_solve(tau, rho).cases) {
      if (c.rank != 1) continue;
      ++seen;
      for (const Vec3& d : c.directions) CHECK(std::abs(d.z()) < 1e-8);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("S-set: curve continuity") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const SSetResult r = sset_solve(Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)), RigidMotion{rng.rotation(), rng.direction()});
    const double lambda = rng.uniform(-10, 10);
    bool near = false;
    for (double m : r.eigenvalues) near |= std::abs(lambda - m) < 0.1;
    if (near) continue;
    const double d1 = (r.curve_at(lambda) - r.curve_at(lambda + 1e-6)).norm();
    const double d2 = (r.curve_at(lambda) - r.curve_at(lambda + 1e-8)).norm();
    CHECK(d1 < 1e-3);
    CHECK(d2 <= d1 * 0.02 + 1e-12);
  }
}

TEST_CASE("S-set: grid oracle on a rotated motion") {
  const RigidMotion rho{Rotation3::axis_angle(kE2, kPi / 2), Vec3(0.5, 0.0, 0.0)};
  const SSetResult r = sset_solve(Vec2(0.5, 0.5), rho);
  const GridCheck gc = sset_grid_check(r, 61, 3.0, 1e-6);
  CHECK(gc.max_distance <= 1e-4);
}
