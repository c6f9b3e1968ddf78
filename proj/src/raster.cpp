#include "rhwarp/raster.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>

#include "rhwarp/error.hpp"

namespace rhwarp {

Affine2 Affine2::inverse() const {
  const double det = A.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300) fail(ErrorKind::degenerate, "Affine2: singular matrix");
  Affine2 inv;
  inv.A = A.inverse();
  inv.b = -inv.A * b;
  return inv;
}

Affine2 pixel_to_calibrated(const Camera& cam) {
  Affine2 a;
  a.A = cam.K_inv().topLeftCorner<2, 2>();
  a.b = cam.K_inv().block<2, 1>(0, 2);
  return a;
}

Raster::Raster(int height, int width, int channels, const Affine2& pix2cal)
    : height_(height), width_(width), channels_(channels), pix2cal_(pix2cal) {
  if (height <= 0 || width <= 0 || channels <= 0)
    fail(ErrorKind::invalid_argument, "Raster: dimensions must be positive");
  data_.assign(static_cast<std::size_t>(channels) * pixel_count(), 0.0);
  valid_.assign(pixel_count(), 1);
}

std::size_t Raster::valid_count() const {
  return static_cast<std::size_t>(std::count(valid_.begin(), valid_.end(), std::uint8_t{1}));
}

void Raster::zero_invalid() {
  for (int c = 0; c < channels_; ++c) {
    double* p = plane(c);
    for (std::size_t i = 0; i < pixel_count(); ++i)
      if (!valid_[i]) p[i] = 0.0;
  }
}

SourceMap::SourceMap(int h, int w)
    : height(h),
      width(w),
      sx(static_cast<std::size_t>(h) * w, std::numeric_limits<double>::quiet_NaN()),
      sy(static_cast<std::size_t>(h) * w, std::numeric_limits<double>::quiet_NaN()) {}

Raster resample(const Raster& src, const SourceMap& map, const Affine2& out_pix2cal, kernels::Isa isa) {
  Raster out(map.height, map.width, src.channels(), out_pix2cal);
  const int w = src.width();
  const int h = src.height();
  const std::size_t n = out.pixel_count();
  std::vector<double> sx(n, 0.0);
  std::vector<double> sy(n, 0.0);
  auto& valid = out.mask();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = map.sx[i];
    const double y = map.sy[i];
    bool ok = std::isfinite(x) && std::isfinite(y) && x >= 0.0 && y >= 0.0 && x <= w - 1 && y <= h - 1;
    if (ok) {
      const int x0 = static_cast<int>(std::floor(x));
      const int y0 = static_cast<int>(std::floor(y));
      const int x1 = std::min(x0 + 1, w - 1);
      const int y1 = std::min(y0 + 1, h - 1);
      ok = src.valid(y0, x0) && src.valid(y0, x1) && src.valid(y1, x0) && src.valid(y1, x1);
    }
    valid[i] = ok ? 1 : 0;
    if (ok) {
      sx[i] = x;
      sy[i] = y;
    }
  }
  for (int c = 0; c < src.channels(); ++c)
    kernels::remap_bilinear(isa, src.plane(c), w, h, sx.data(), sy.data(), out.plane(c), n);
  out.zero_invalid();
  return out;
}

std::vector<std::uint8_t> resample_mask_nearest(const std::vector<std::uint8_t>& mask, int w, int h,
                                                const SourceMap& map) {
  if (mask.size() != static_cast<std::size_t>(w) * h)
    fail(ErrorKind::invalid_argument, "resample_mask_nearest: mask size mismatch");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(map.width) * map.height, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = map.sx[i];
    const double y = map.sy[i];
    if (!(std::isfinite(x) && std::isfinite(y))) continue;
    const double rx = std::round(x);
    const double ry = std::round(y);
    if (rx < 0 || ry < 0 || rx > w - 1 || ry > h - 1) continue;
    out[i] = mask[static_cast<std::size_t>(ry) * w + static_cast<std::size_t>(rx)] ? 1 : 0;
  }
  return out;
}

Raster warp_by_homography(const Raster& src, const Homography& H, int out_h, int out_w, kernels::Isa isa) {
  const Mat3 inv = H.inverse().matrix();
  SourceMap map(out_h, out_w);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const Vec3 p = inv * Vec3(x, y, 1.0);
      if (std::abs(p.z()) < 1e-12) continue;
      const std::size_t i = static_cast<std::size_t>(y) * out_w + x;
      map.sx[i] = p.x() / p.z();
      map.sy[i] = p.y() / p.z();
    }
  }
  return resample(src, map, src.pix2cal(), isa);
}

Raster translate(const Raster& src, const Vec2& shift, kernels::Isa isa) {
  SourceMap map(src.height(), src.width());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * src.width() + x;
      map.sx[i] = x - shift.x();
      map.sy[i] = y - shift.y();
    }
  }
  return resample(src, map, src.pix2cal(), isa);
}

BBox mask_bbox(const std::vector<std::uint8_t>& mask, int w, int h) {
  BBox box{w, h, -1, -1};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask[static_cast<std::size_t>(y) * w + x]) continue;
      box.x0 = std::min(box.x0, x);
      box.y0 = std::min(box.y0, y);
      box.x1 = std::max(box.x1, x);
      box.y1 = std::max(box.y1, y);
    }
  }
  if (box.x1 < 0) return BBox{};
  return box;
}

double mean_abs_diff(const Raster& a, const Raster& b) {
  if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels())
    fail(ErrorKind::precondition, "mean_abs_diff: raster shapes differ");
  double sum = 0.0;
  std::size_t count = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      if (!a.valid(y, x) || !b.valid(y, x)) continue;
      for (int c = 0; c < a.channels(); ++c) sum += std::abs(a.at(c, y, x) - b.at(c, y, x));
      count += static_cast<std::size_t>(a.channels());
    }
  }
  if (count == 0) fail(ErrorKind::precondition, "mean_abs_diff: empty jointly valid region");
  return sum / static_cast<double>(count);
}

}  // namespace rhwarp
