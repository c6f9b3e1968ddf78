#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/so3py.hpp"
#include "rhwarp/synth.hpp"

using namespace rhwarp;

namespace {

double maxabs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("exp_py examples") {
  CHECK(maxabs(exp_py({0, 0}).matrix() - Mat3::Identity()) == 0.0);
  const Vec3 p = exp_py({kPi / 2, 0}) * kE2;
  CHECK((p - Vec3(0, -1, 0)).norm() < 1e-15);
}

TEST_CASE("exp_py matches scaling-and-squaring expm") {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const PYVec a = rng.py(0.0, 4.0 * kPi);
    CHECK(maxabs(exp_py(a).matrix() - oracle::expm_py(a.a0, a.a1)) < 1e-12);
  }
  for (double r : {1e-12, 1e-9, 3e-7, 9.9e-7, 1e-6, 1.1e-6, 1e-4}) {
    const PYVec a{0.6 * r, -0.8 * r};
    CHECK(maxabs(exp_py(a).matrix() - oracle::expm_py(a.a0, a.a1)) < 4e-16);
  }
}

TEST_CASE("exp_py moves e2 to the polar point at r, phi - pi/2") {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double r = rng.uniform(0.0, kPi);
    const double phi = rng.uniform(-kPi, kPi);
    const Vec3 expected(std::sin(r) * std::cos(phi - kPi / 2), std::sin(r) * std::sin(phi - kPi / 2), std::cos(r));
    CHECK((exp_py_e2({r * std::cos(phi), r * std::sin(phi)}) - expected).norm() < 1e-14);
  }
}

TEST_CASE("exp_py_e2 agrees with the matrix") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const PYVec a = rng.py(0.0, 4.0 * kPi);
    CHECK((exp_py_e2(a) - exp_py(a) * kE2).norm() < 1e-14);
  }
}

TEST_CASE("min_py_log examples") {
  CHECK(min_py_log(kE2).vec().norm() == 0.0);
  CHECK((min_py_log(Vec3(0, -1, 0)).vec() - Vec2(kPi / 2, 0)).norm() < 1e-15);
  CHECK(throws_kind([] { min_py_log(Vec3(-0.0, 0, -1)); }, ErrorKind::degenerate));
}

TEST_CASE("phi_map examples") {
  auto s = phi_map({kPi / 2, 0});
  CHECK(s.n == 0);
  CHECK((s.p - Vec3(0, -1, 0)).norm() < 1e-15);
  s = phi_map({3 * kPi / 2, 0});
  CHECK(s.n == 1);
  CHECK((s.p - Vec3(0, 1, 0)).norm() < 1e-15);
  s = phi_map({0, 0});
  CHECK(s.n == 0);
  CHECK(s.p == kE2);
  CHECK(throws_kind([] { phi_map({kPi, 0}); }, ErrorKind::non_injective));
  CHECK(throws_kind([] { phi_map({0, -2 * kPi}); }, ErrorKind::non_injective));
}

TEST_CASE("phi_inverse examples") {
  CHECK(phi_inverse({0, kE2}).vec().norm() == 0.0);
  CHECK((phi_inverse({0, Vec3(0, -1, 0)}).vec() - Vec2(kPi / 2, 0)).norm() < 1e-15);
  CHECK((phi_inverse({1, Vec3(0, 1, 0)}).vec() - Vec2(3 * kPi / 2, 0)).norm() < 1e-14);
  CHECK(throws_kind([] { phi_inverse({1, kE2}); }, ErrorKind::degenerate));
  CHECK(throws_kind([] { phi_inverse({2, -kE2}); }, ErrorKind::degenerate));
  CHECK(throws_kind([] { phi_inverse({-1, kE2}); }, ErrorKind::invalid_argument));
}

TEST_CASE("py_to_plane and plane_to_py examples") {
  CHECK((py_to_plane({0, kPi / 4}) - Vec2(1, 0)).norm() < 1e-15);
  CHECK(py_to_plane({0, 0}).norm() == 0.0);
  CHECK((py_to_plane({kPi / 4, 0}) - Vec2(0, -1)).norm() < 1e-15);
  CHECK(throws_kind([] { py_to_plane({kPi / 2, 0}); }, ErrorKind::out_of_domain));
  CHECK(plane_to_py({0, 0}).vec().norm() == 0.0);
  CHECK((plane_to_py({1, 0}).vec() - Vec2(0, kPi / 4)).norm() < 1e-15);
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 u(rng.uniform(-20, 20), rng.uniform(-20, 20));
    CHECK((py_to_plane(plane_to_py(u)) - u).norm() <= 1e-12 * std::max(1.0, u.norm()));
  }
}

TEST_CASE("warp coordinates reconcile the two planar conventions") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const PYVec a = rng.py(0.0, 1.5);
    const Vec2 q = warp_coords(a);
    CHECK(q == Vec2(a.a1, -a.a0));
    CHECK(from_warp_coords(q) == a);
    CHECK((warp_to_plane(q) - py_to_plane(a)).norm() < 1e-13 * std::max(1.0, py_to_plane(a).norm()));
    CHECK((plane_to_warp(warp_to_plane(q)) - q).norm() < 1e-14);
  }
}

TEST_CASE("invariants") {
  Rng rng(6);
  double ortho = 0, commute = 0, logrt = 0, phirt = 0, geo = 0, plane = 0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 4.0 * kPi);
    ortho = std::max(ortho, Rotation3::orthonormality_error(exp_py(a).matrix()));
    const double t = rng.uniform(-2, 2);
    commute = std::max(commute, maxabs((exp_py(a) * exp_py(t * a)).matrix() - exp_py((1 + t) * a).matrix()));
    const PYVec b = rng.py(0.0, kPi - 1e-6);
    logrt = std::max(logrt, (min_py_log(exp_py_e2(b)) - b).vec().norm());
    const double r = a.norm();
    if (std::abs(r - kPi * std::round(r / kPi)) > 1e-6) phirt = std::max(phirt, (phi_inverse(phi_map(a)) - a).vec().norm());
    const double tt = rng.unit();
    const double arc = std::fmod(tt * r, 2 * kPi);
    geo = std::max(geo, std::abs(sphere_distance(exp_py_e2(tt * a), kE2) - (arc <= kPi ? arc : 2 * kPi - arc)));
    const PYVec c = rng.py(0.0, 1.5);
    plane = std::max(plane, (py_to_plane(c) - oracle::proj(oracle::expm_py(c.a0, c.a1) * kE2)).norm() /
                                std::max(1.0, py_to_plane(c).norm()));
  }
  CHECK(ortho < 1e-12);
  CHECK(commute < 1e-12);
  CHECK(logrt < 1e-9);
  CHECK(phirt < 1e-9);
  CHECK(geo < 1e-9);
  CHECK(plane < 1e-12);
}

TEST_CASE("Rotation3 construction") {
  CHECK(throws_kind([] { Rotation3::from_matrix(2.0 * Mat3::Identity()); }, ErrorKind::invalid_argument));
  Mat3 m = Rotation3::axis_angle(kE0, 0.3).matrix();
  m(0, 1) += 1e-7;
  CHECK(Rotation3::orthonormality_error(Rotation3::nearest(m).matrix()) < 1e-14);
  CHECK(throws_kind([&] { Rotation3::from_matrix(m); }, ErrorKind::invalid_argument));
  CHECK(maxabs(Rotation3::axis_angle(kE2, kPi / 2).matrix() - oracle::expm(oracle::skew(kPi / 2 * kE2))) < 1e-15);
}
