#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/pywarp.hpp"
#include "rhwarp/synth.hpp"

using namespace rhwarp;

namespace {

Camera test_camera() {
  Mat3 K;
  K << 150, 0, 80, 0, 150, 60, 0, 0, 1;
  return Camera(K, 161, 121);
}

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("constant image stays constant on the valid region") {
  const Camera cam = test_camera();
  Raster img(cam.height(), cam.width(), 3);
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < cam.height(); ++y)
      for (int x = 0; x < cam.width(); ++x) img.at(c, y, x) = 0.25 * (c + 1);
  const Raster py = warp_to_py(img, cam, 100, 130);
  CHECK(py.valid_count() > 0);
  CHECK(py.valid_count() < py.pixel_count());
  for (int y = 0; y < py.height(); ++y)
    for (int x = 0; x < py.width(); ++x)
      for (int c = 0; c < 3; ++c) CHECK(py.at(c, y, x) == doctest::Approx(py.valid(y, x) ? 0.25 * (c + 1) : 0.0).epsilon(1e-14));
  const Raster back = warp_from_py(py, cam, cam.height(), cam.width());
  for (int y = 0; y < back.height(); ++y)
    for (int x = 0; x < back.width(); ++x)
      if (back.valid(y, x)) CHECK(back.at(2, y, x) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("principal point maps to the PY origin unchanged") {
  const Camera cam = test_camera();
  const Raster img = smooth_image(cam.height(), cam.width(), 1, 4);
  const Affine2 grid = py_grid_with_spacing(0.004, 51, 61);
  CHECK(grid(Vec2(30, 25)) == Vec2(0, 0));
  const Raster py = warp_to_py(img, cam, 51, 61, grid);
  CHECK(py.valid(25, 30));
  CHECK(py.at(0, 25, 30) == img.at(0, 60, 80));
}

TEST_CASE("calibrated radius 1 lands at PY radius pi/4") {
  CHECK(plane_to_warp(Vec2(1, 0)).norm() == doctest::Approx(kPi / 4).epsilon(1e-15));
  const Camera cam = test_camera();
  const double s = kPi / 4 / 10;
  const Affine2 grid = py_grid_with_spacing(s, 41, 41);
  const SourceMap map = py_source_map(cam, grid, 41, 41);
  // Pixel (30, 20) has q = (pi/4, 0): calibrated (1, 0), source pixel (cx + fx, cy).
  const std::size_t i = 20 * 41 + 30;
  CHECK(map.sx[i] == doctest::Approx(80 + 150).epsilon(1e-12));
  CHECK(map.sy[i] == doctest::Approx(60).epsilon(1e-12));
  // Same for q = (0, -pi/4): calibrated (0, -1).
  const std::size_t j = 10 * 41 + 20;
  CHECK(map.sx[j] == doctest::Approx(80).epsilon(1e-12));
  CHECK(map.sy[j] == doctest::Approx(60 - 150).epsilon(1e-12));
}

TEST_CASE("round trip of a smooth image") {
  const Camera cam = test_camera();
  const Raster img = smooth_image(cam.height(), cam.width(), 3, 9);
  const Raster py = warp_to_py(img, cam, 160, 200);
  const Raster back = warp_from_py(py, cam, cam.height(), cam.width());
  double sum = 0;
  std::size_t n = 0;
  for (int y = 2; y < cam.height() - 2; ++y)
    for (int x = 2; x < cam.width() - 2; ++x) {
      if (!back.valid(y, x)) continue;
      for (int c = 0; c < 3; ++c) sum += std::abs(back.at(c, y, x) - img.at(c, y, x));
      n += 3;
    }
  CHECK(n > 0.9 * 3 * (cam.height() - 4) * (cam.width() - 4));
  CHECK(sum / n < 0.01);
}

TEST_CASE("all-invalid input gives all-invalid output") {
  const Camera cam = test_camera();
  Raster py(40, 50, 1, fit_py_grid(cam, 40, 50));
  py.mask().assign(py.pixel_count(), 0);
  CHECK(warp_from_py(py, cam, cam.height(), cam.width()).valid_count() == 0);
}

TEST_CASE("fitted grid fills the output") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Camera cam = rng.camera(320, 240);
    const int h = 90, w = 110;
    const Affine2 grid = fit_py_grid(cam, h, w);
    const Raster py = warp_to_py(Raster(cam.height(), cam.width(), 1), cam, h, w, grid);
    const BBox b = mask_bbox(py.mask(), w, h);
    const bool fills_x = b.x0 <= 1 && b.x1 >= w - 2;
    const bool fills_y = b.y0 <= 1 && b.y1 >= h - 2;
    CHECK((fills_x || fills_y));
    // Every source corner lies inside the grid.
    const Affine2 inv = grid.inverse();
    for (Vec2 c : {Vec2(0, 0), Vec2(cam.width() - 1, 0), Vec2(0, cam.height() - 1), Vec2(cam.width() - 1, cam.height() - 1)}) {
      const Vec2 p = inv(plane_to_warp(cam.to_calibrated(c)));
      CHECK(p.x() >= -1e-9);
      CHECK(p.y() >= -1e-9);
      CHECK(p.x() <= w - 1 + 1e-9);
      CHECK(p.y() <= h - 1 + 1e-9);
    }
  }
}

TEST_CASE("mask consistency and radial monotonicity") {
  const Camera cam = test_camera();
  const Affine2 grid = fit_py_grid(cam, 120, 150);
  const Raster py = warp_to_py(Raster(cam.height(), cam.width(), 1), cam, 120, 150, grid);
  for (int y = 0; y < py.height(); ++y)
    for (int x = 0; x < py.width(); ++x) {
      if (!py.valid(y, x)) continue;
      const Vec2 q = grid(Vec2(x, y));
      const double r = q.norm();
      const Vec2 u = r > 0 ? Vec2(std::tan(r) / r * q) : Vec2(0, 0);
      const Vec2 s = cam.to_pixel(u);
      CHECK(s.x() >= 0);
      CHECK(s.y() >= 0);
      CHECK(s.x() <= cam.width() - 1);
      CHECK(s.y() <= cam.height() - 1);
    }
  double prev = -1;
  for (int i = 0; i <= 400; ++i) {
    const Vec2 u = Vec2(0.6, -0.8) * (0.1 * i);
    const Vec2 q = plane_to_warp(u);
    CHECK(q.norm() > prev);
    CHECK(q.norm() == doctest::Approx(std::atan(u.norm())).epsilon(1e-15));
    if (i > 0) CHECK(std::abs(std::atan2(q.y(), q.x()) - std::atan2(-0.8, 0.6)) < 1e-14);
    prev = q.norm();
  }
}

TEST_CASE("mask warping and boxes") {
  const Camera cam = test_camera();
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(cam.width()) * cam.height(), 0);
  for (int y = 50; y <= 70; ++y)
    for (int x = 70; x <= 90; ++x) mask[static_cast<std::size_t>(y) * cam.width() + x] = 1;
  const Affine2 grid = py_grid_with_spacing(1.0 / 150, 121, 161);
  const auto m = warp_mask_to_py(mask, cam, grid, 121, 161);
  const BBox b = mask_bbox(m, 161, 121);
  // Near the principal point the PY map is close to the identity at this spacing.
  CHECK(std::abs(b.x0 - 70) <= 1);
  CHECK(std::abs(b.x1 - 90) <= 1);
  CHECK(std::abs(b.y0 - 50) <= 1);
  CHECK(std::abs(b.y1 - 70) <= 1);
  const auto back = warp_mask_from_py(m, 121, 161, grid, cam, cam.height(), cam.width());
  std::size_t diff = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) diff += mask[i] != back[i];
  CHECK(diff <= 8);
}

TEST_CASE("target conversions") {
  PYPoseTarget t = target_to_py(Vec3(0, 0, 2));
  CHECK(t.alpha.vec().norm() == 0.0);
  CHECK(t.s == 2.0);
  t = target_to_py(Vec3(1, 0, 1));
  CHECK(t.alpha.norm() == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK((t.alpha.vec() - plane_to_py(Vec2(1, 0)).vec()).norm() < 1e-15);
  CHECK(t.s == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(throws_kind([] { target_to_py(Vec3(0, 0, -1)); }, ErrorKind::behind_camera));

  CHECK((target_from_py({{0, 0}, 2}) - Vec3(0, 0, 2)).norm() == 0.0);
  CHECK(throws_kind([] { target_from_py({{0, 0}, 0}); }, ErrorKind::precondition));
  CHECK(throws_kind([] { target_from_py({{kPi / 2, 0}, 1}); }, ErrorKind::out_of_domain));

  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double z = rng.uniform(0.1, 10);
    const Vec3 x(rng.uniform(-3, 3) * z, rng.uniform(-3, 3) * z, z);
    CHECK((target_from_py(target_to_py(x)) - x).norm() <= 1e-10 * x.norm());
    const PYPoseTarget g{rng.py(0, 1.5), rng.uniform(0.1, 10)};
    const PYPoseTarget h = target_to_py(target_from_py(g));
    CHECK((h.alpha - g.alpha).vec().norm() < 1e-10);
    CHECK(std::abs(h.s - g.s) < 1e-10 * g.s);
  }
}

TEST_CASE("target pixel in a PY raster") {
  const Affine2 grid = py_grid_with_spacing(0.01, 101, 101);
  const PYPoseTarget t = target_to_py(Vec3(std::tan(0.2), 0, 1));
  const Vec2 p = target_py_pixel(t, grid);
  CHECK(p.x() == doctest::Approx(70).epsilon(1e-12));
  CHECK(p.y() == doctest::Approx(50).epsilon(1e-12));
}

TEST_CASE("pixel frames") {
  CHECK((pixel_frame(kE2).matrix() - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  const Vec3 th(1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0));
  CHECK((pixel_frame(th).matrix().col(2) - th).norm() < 1e-15);
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 d = rng.direction();
    if (d.z() < -0.99) continue;
    const Rotation3 F = pixel_frame(d);
    CHECK((F.matrix().col(2) - d).norm() < 1e-10);
    const Rotation3 R = rng.rotation();
    const Mat3 rel = F.matrix().transpose() * R.matrix();
    CHECK((F.matrix() * rel - R.matrix()).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK(throws_kind([] { pixel_frame(-kE2); }, ErrorKind::degenerate));
}
