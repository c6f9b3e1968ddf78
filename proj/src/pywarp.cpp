#include "rhwarp/pywarp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

constexpr double kHalfPi = kPi / 2.0;

void check_size(int h, int w) {
  if (h < 2 || w < 2) fail(ErrorKind::invalid_argument, "PY raster needs at least 2x2 pixels");
}

}  // namespace

WarpBox py_footprint(const Camera& cam) {
  const double xm = cam.width() - 1.0;
  const double ym = cam.height() - 1.0;
  const Vec2 pp = cam.principal_point();
  const double px = std::clamp(pp.x(), 0.0, xm);
  const double py = std::clamp(pp.y(), 0.0, ym);
  const Vec2 samples[] = {
      {0, 0},  {xm, 0}, {0, ym},  {xm, ym},                     // corners
      {xm / 2, 0}, {xm / 2, ym}, {0, ym / 2}, {xm, ym / 2},     // edge midpoints
      {px, 0}, {px, ym}, {0, py}, {xm, py},                     // nearest to principal point
  };
  WarpBox box;
  box.lo = Vec2::Constant(std::numeric_limits<double>::infinity());
  box.hi = -box.lo;
  for (const Vec2& s : samples) {
    const Vec2 q = plane_to_warp(cam.to_calibrated(s));
    box.lo = box.lo.cwiseMin(q);
    box.hi = box.hi.cwiseMax(q);
  }
  return box;
}

Affine2 fit_py_grid(const Camera& cam, int out_h, int out_w) {
  check_size(out_h, out_w);
  const auto [lo, hi] = py_footprint(cam);
  const double spacing = std::max((hi.x() - lo.x()) / (out_w - 1), (hi.y() - lo.y()) / (out_h - 1));
  if (!(spacing > 0.0)) fail(ErrorKind::degenerate, "fit_py_grid: empty image footprint");
  return py_grid_with_spacing(spacing, out_h, out_w, (lo + hi) / 2.0);
}

Affine2 py_grid_with_spacing(double spacing, int out_h, int out_w, const Vec2& center) {
  check_size(out_h, out_w);
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    fail(ErrorKind::invalid_argument, "py_grid_with_spacing: spacing must be positive");
  Affine2 a;
  a.A = spacing * Mat2::Identity();
  a.b = center - spacing * Vec2((out_w - 1) / 2.0, (out_h - 1) / 2.0);
  return a;
}

SourceMap py_source_map(const Camera& cam, const Affine2& pix2q, int out_h, int out_w) {
  SourceMap map(out_h, out_w);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const Vec2 q = pix2q(Vec2(x, y));
      if (!(q.norm() < kHalfPi)) continue;
      const Vec2 src = cam.to_pixel(warp_to_plane(q));
      const std::size_t i = static_cast<std::size_t>(y) * out_w + x;
      map.sx[i] = src.x();
      map.sy[i] = src.y();
    }
  }
  return map;
}

Raster warp_to_py(const Raster& img, const Camera& cam, int out_h, int out_w, kernels::Isa isa) {
  return warp_to_py(img, cam, out_h, out_w, fit_py_grid(cam, out_h, out_w), isa);
}

Raster warp_to_py(const Raster& img, const Camera& cam, int out_h, int out_w, const Affine2& pix2q,
                  kernels::Isa isa) {
  if (img.width() != cam.width() || img.height() != cam.height())
    fail(ErrorKind::invalid_argument, "warp_to_py: image size does not match camera");
  return resample(img, py_source_map(cam, pix2q, out_h, out_w), pix2q, isa);
}

Affine2 camera_resize_map(const Camera& cam, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0) fail(ErrorKind::invalid_argument, "output size must be positive");
  Affine2 a;
  const double sx = static_cast<double>(cam.width()) / out_w;
  const double sy = static_cast<double>(cam.height()) / out_h;
  a.A = Vec2(sx, sy).asDiagonal();
  a.b = Vec2(0.5 * sx - 0.5, 0.5 * sy - 0.5);
  return a;
}

namespace {

SourceMap from_py_source_map(const Affine2& pix2q, const Camera& cam, int out_h, int out_w) {
  const Affine2 out2cam = camera_resize_map(cam, out_h, out_w);
  const Affine2 q2pix = pix2q.inverse();
  SourceMap map(out_h, out_w);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const Vec2 q = plane_to_warp(cam.to_calibrated(out2cam(Vec2(x, y))));
      const Vec2 src = q2pix(q);
      const std::size_t i = static_cast<std::size_t>(y) * out_w + x;
      map.sx[i] = src.x();
      map.sy[i] = src.y();
    }
  }
  return map;
}

}  // namespace

Raster warp_from_py(const Raster& img_py, const Camera& cam, int out_h, int out_w, kernels::Isa isa) {
  const Affine2 out2cam = camera_resize_map(cam, out_h, out_w);
  Affine2 pix2cal = pixel_to_calibrated(cam);
  pix2cal.b = pix2cal.A * out2cam.b + pix2cal.b;
  pix2cal.A = pix2cal.A * out2cam.A;
  return resample(img_py, from_py_source_map(img_py.pix2cal(), cam, out_h, out_w), pix2cal, isa);
}

std::vector<std::uint8_t> warp_mask_to_py(const std::vector<std::uint8_t>& mask, const Camera& cam,
                                          const Affine2& pix2q, int out_h, int out_w) {
  return resample_mask_nearest(mask, cam.width(), cam.height(), py_source_map(cam, pix2q, out_h, out_w));
}

std::vector<std::uint8_t> warp_mask_from_py(const std::vector<std::uint8_t>& mask_py, int py_h, int py_w,
                                            const Affine2& pix2q, const Camera& cam, int out_h, int out_w) {
  return resample_mask_nearest(mask_py, py_w, py_h, from_py_source_map(pix2q, cam, out_h, out_w));
}

PYPoseTarget target_to_py(const Vec3& t) {
  if (!(t.z() > 0.0)) fail(ErrorKind::behind_camera, "target_to_py: t2 must be positive");
  return {plane_to_py(project(t)), t.norm()};
}

Vec3 target_from_py(const PYPoseTarget& tgt) {
  if (!(tgt.s > 0.0) || !std::isfinite(tgt.s)) fail(ErrorKind::precondition, "target_from_py: s must be positive");
  if (!(tgt.alpha.norm() < kHalfPi)) fail(ErrorKind::out_of_domain, "target_from_py: |alpha| >= pi/2");
  return tgt.s * exp_py_e2(tgt.alpha);
}

Vec2 target_py_pixel(const PYPoseTarget& tgt, const Affine2& pix2q) {
  return pix2q.inverse()(warp_coords(tgt.alpha));
}

Rotation3 pixel_frame(const SpherePoint& theta) { return exp_py(min_py_log(theta)); }

}  // namespace rhwarp
