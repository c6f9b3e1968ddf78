#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rhwarp/augment.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/synth.hpp"

using namespace rhwarp;

namespace {

Camera test_camera() { return Camera::pinhole(300, 310, 159.5, 119.5, 320, 240); }

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

Mat3 rot_z(double a) {
  Mat3 m;
  m << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return m;
}

}  // namespace

TEST_CASE("config validation") {
  AugConfig c;
  CHECK_NOTHROW(c.validate());
  c.scale_lo = 1.5;
  CHECK(throws_kind([&] { c.validate(); }, ErrorKind::invalid_argument));
  c = {};
  c.scale_lo = 0;
  CHECK(throws_kind([&] { c.validate(); }, ErrorKind::invalid_argument));
  c = {};
  c.roll_lo_deg = 10;
  c.roll_hi_deg = -10;
  CHECK(throws_kind([&] { c.validate(); }, ErrorKind::invalid_argument));
  c = {};
  c.tilt_max_deg = 90;
  CHECK(throws_kind([&] { c.validate(); }, ErrorKind::invalid_argument));
  c.tilt_max_deg = -1;
  CHECK(throws_kind([&] { c.validate(); }, ErrorKind::invalid_argument));
}

TEST_CASE("sampling is deterministic and in range") {
  const Camera cam = test_camera();
  AugConfig cfg;
  cfg.seed = 123456789012345ULL;
  const AugSample a = sample_aug(cfg, 7, cam);
  const AugSample b = sample_aug(cfg, 7, cam);
  CHECK(a.f == b.f);
  CHECK(a.roll == b.roll);
  CHECK(a.tilt_alpha == b.tilt_alpha);
  CHECK(a.H.matrix() == b.H.matrix());
  const AugSample c = sample_aug(cfg, 8, cam);
  CHECK(a.f != c.f);
  cfg.seed += 1;
  CHECK(sample_aug(cfg, 7, cam).f != a.f);

  cfg = {};
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const AugSample s = sample_aug(cfg, i, cam);
    REQUIRE(s.f >= 0.7);
    REQUIRE(s.f < 1.3);
    REQUIRE(s.roll >= -kPi / 4);
    REQUIRE(s.roll < kPi / 4);
    REQUIRE(s.tilt_alpha.norm() <= 20 * kPi / 180 + 1e-15);
  }
}

TEST_CASE("degenerate ranges give the identity") {
  const Camera cam = test_camera();
  AugConfig cfg;
  cfg.scale_lo = cfg.scale_hi = 1;
  cfg.roll_lo_deg = cfg.roll_hi_deg = 0;
  cfg.tilt_max_deg = 0;
  const AugSample s = sample_aug(cfg, 3, cam);
  CHECK((s.H.matrix() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("homography against a direct construction") {
  const Camera cam = test_camera();
  const Mat3 K = cam.K();
  const Mat3 Ki = K.inverse();
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double f = rng.uniform(0.5, 1.5);
    const double roll = rng.uniform(-1, 1);
    const PYVec t = rng.py(0, 0.5);
    const Mat3 S = Vec3(f, f, 1).asDiagonal();
    const Mat3 expect = K * S * oracle::expm_py(t.a0, t.a1) * rot_z(roll) * Ki;
    CHECK(proportional(aug_homography(cam, f, roll, t).matrix(), expect, 1e-12));
    AugSample a{f, roll, t, aug_homography(cam, f, roll, t)};
    const AugFactors fac = aug_factors(cam, a);
    CHECK(proportional((fac.scale * fac.tilt * fac.roll).matrix(), a.H.matrix(), 1e-12));
  }
  // Pure roll rotates pixels about the principal point.
  const Camera sq = Camera::pinhole(200, 200, 100, 80, 201, 161);
  const Homography H = aug_homography(sq, 1, kPi / 2, {});
  const Vec2 p = apply_homography(H, Vec2(110, 80));
  CHECK(p.x() == doctest::Approx(100).epsilon(1e-12));
  CHECK(p.y() == doctest::Approx(90).epsilon(1e-12));
  // Pure scale scales about the principal point.
  const Vec2 q = apply_homography(aug_homography(sq, 2, 0, {}), Vec2(110, 70));
  CHECK(q.x() == doctest::Approx(120).epsilon(1e-12));
  CHECK(q.y() == doctest::Approx(60).epsilon(1e-12));
}

TEST_CASE("P2 augmentation keeps labels on the warped image") {
  const Camera cam = test_camera();
  Raster img = smooth_image(cam.height(), cam.width(), 1, 2);
  AugConfig cfg;
  cfg.seed = 11;
  Rng rng(6);
  for (std::uint64_t i = 0; i < 30; ++i) {
    const AugSample a = sample_aug(cfg, i, cam);
    ObjectPose pose{rng.rotation(), Vec3(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(2, 5))};
    const auto [out, label] = apply_aug_p2(img, pose, cam, a);
    CHECK(out.height() == cam.height());
    CHECK(out.width() == cam.width());
    for (int k = 0; k < 5; ++k) {
      const Vec3 x(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2));
      const Vec2 before = project_pixel(cam, pose, x);
      const Vec2 warped = apply_homography(a.H, before);
      // The zoom acts about the principal point on top of the rotation.
      const ObjectPose rot = object_pose_relabel(pose, aug_rotation(a.roll, a.tilt_alpha));
      const Vec2 rotated = project_pixel(cam, rot, x);
      const Vec2 pp = cam.principal_point();
      CHECK((warped - (pp + a.f * (rotated - pp))).norm() < 1e-8);
    }
    CHECK(label.t.z() == doctest::Approx(object_pose_relabel(pose, aug_rotation(a.roll, a.tilt_alpha)).t.z() / a.f));
    CHECK((label.R.matrix() - aug_rotation(a.roll, a.tilt_alpha).matrix() * pose.R.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    const Vec2 origin_before = project_pixel(cam, pose, Vec3::Zero());
    const Vec2 origin_after = project_pixel(cam, label, Vec3::Zero());
    CHECK((apply_homography(a.H, origin_before) - origin_after).norm() < 1e-8);
  }
}

TEST_CASE("PY label update") {
  AugSample a;
  a.f = 0.5;
  const auto [t, R] = apply_aug_py({{0.2, 0.0}, 2.0}, Rotation3(), a);
  CHECK(t.alpha.a0 == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(t.alpha.a1 == 0.0);
  CHECK(t.s == 4.0);
  CHECK((R.matrix() - oracle::expm_py(0.1, 0.0)).cwiseAbs().maxCoeff() < 1e-14);

  AugSample big;
  big.f = 1.3;
  CHECK(throws_kind([&] { apply_aug_py({{1.3, 0.0}, 1.0}, Rotation3(), big); }, ErrorKind::out_of_domain));

  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const PYPoseTarget g{rng.py(0, 0.6), rng.uniform(1, 5)};
    const Rotation3 R0 = rng.rotation();
    const Vec3 ray = oracle::expm_py(g.alpha.a0, g.alpha.a1).col(2);

    // Roll alone is a rotation about the optical axis: exact.
    AugSample r;
    r.roll = rng.uniform(-0.8, 0.8);
    const auto [hr, Rr] = apply_aug_py(g, R0, r);
    CHECK((target_from_py(hr) - g.s * (rot_z(r.roll) * ray)).norm() < 1e-12 * g.s);
    CHECK((Rr.matrix() - rot_z(r.roll) * R0.matrix()).cwiseAbs().maxCoeff() < 1e-14);

    // Tilt adds in PY coordinates: the target moves by the PY translation,
    // the object rotation by the full tilt rotation.
    AugSample b = r;
    b.tilt_alpha = rng.py(0, 0.3);
    const auto [h, R1] = apply_aug_py(g, R0, b);
    const Vec2 rolled = (rot_z(b.roll) * Vec3(g.alpha.a0, g.alpha.a1, 0)).head<2>();
    const Vec2 moved = rolled + b.tilt_alpha.vec();
    CHECK((h.alpha.vec() - moved).norm() < 1e-15);
    CHECK(h.s == g.s);
    CHECK((target_from_py(h) - g.s * oracle::expm_py(moved.x(), moved.y()).col(2)).norm() < 1e-12 * g.s);
    const Mat3 Raug = oracle::expm_py(b.tilt_alpha.a0, b.tilt_alpha.a1) * rot_z(b.roll);
    CHECK((R1.matrix() - Raug * R0.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("scale rule discrepancy") {
  CHECK(scale_rule_discrepancy(Vec3(0, 0, 3), 0.7) < 1e-15);
  for (double f : {0.7, 0.9, 1.1, 1.3}) {
    const Vec3 t(0.5, -0.2, 2.0);
    const Vec2 u = oracle::proj(t);
    const double r = u.norm();
    // Scaled PY ray: polar angle kept, elevation angle multiplied by f.
    const double e = f * std::atan(r);
    const Vec3 ray(std::sin(e) * u.x() / r, std::sin(e) * u.y() / r, std::cos(e));
    const Vec3 expect_py = t.norm() / f * ray;
    const Vec3 expect_p2(t.x(), t.y(), t.z() / f);
    CHECK(scale_rule_discrepancy(t, f) == doctest::Approx((expect_p2 - expect_py).norm()).epsilon(1e-12));
    CHECK(scale_rule_discrepancy(t, f) > 0);
  }
}
