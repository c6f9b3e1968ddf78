#pragma once

// Planar multi-channel raster with a validity mask and a pixel -> coordinate
// affine map. Pixel centers sit at integer coordinates.

#include <cstdint>
#include <vector>

#include "rhwarp/camera.hpp"
#include "rhwarp/kernels.hpp"

namespace rhwarp {

/// p -> A p + b
struct Affine2 {
  Mat2 A = Mat2::Identity();
  Vec2 b = Vec2::Zero();

  Vec2 operator()(const Vec2& p) const { return A * p + b; }
  /// Throws ErrorKind::degenerate when A is singular.
  Affine2 inverse() const;
};

/// Pixel -> calibrated coordinates of a camera (top two rows of K^-1).
Affine2 pixel_to_calibrated(const Camera& cam);

class Raster {
 public:
  Raster() = default;
  /// All values 0, all pixels valid.
  Raster(int height, int width, int channels, const Affine2& pix2cal = {});

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(height_) * width_; }

  double& at(int c, int y, int x) { return data_[index(c, y, x)]; }
  double at(int c, int y, int x) const { return data_[index(c, y, x)]; }
  double* plane(int c) { return data_.data() + static_cast<std::size_t>(c) * pixel_count(); }
  const double* plane(int c) const { return data_.data() + static_cast<std::size_t>(c) * pixel_count(); }
  const std::vector<double>& data() const { return data_; }

  bool valid(int y, int x) const { return valid_[static_cast<std::size_t>(y) * width_ + x] != 0; }
  void set_valid(int y, int x, bool v) { valid_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0; }
  std::vector<std::uint8_t>& mask() { return valid_; }
  const std::vector<std::uint8_t>& mask() const { return valid_; }
  std::size_t valid_count() const;

  const Affine2& pix2cal() const { return pix2cal_; }
  void set_pix2cal(const Affine2& a) { pix2cal_ = a; }

  /// Sets every invalid pixel to 0 in all channels.
  void zero_invalid();

 private:
  std::size_t index(int c, int y, int x) const {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
  std::vector<std::uint8_t> valid_;
  Affine2 pix2cal_;
};

/// Source pixel position for every output pixel, row-major; NaN marks an
/// output pixel without a preimage.
struct SourceMap {
  int height = 0;
  int width = 0;
  std::vector<double> sx;
  std::vector<double> sy;

  SourceMap(int h, int w);
};

/// Bilinear resampling. An output pixel is valid iff its source position is
/// inside [0, w-1] x [0, h-1] and the four neighbouring source pixels are
/// valid; invalid outputs are 0.
Raster resample(const Raster& src, const SourceMap& map, const Affine2& out_pix2cal,
                kernels::Isa isa = kernels::best());

/// Nearest-neighbour resampling of a binary mask (w x h, row-major).
std::vector<std::uint8_t> resample_mask_nearest(const std::vector<std::uint8_t>& mask, int w, int h,
                                                const SourceMap& map);

/// Warp by a pixel homography H (source pixels -> output pixels) into an
/// out_h x out_w raster; pix2cal is carried over unchanged.
Raster warp_by_homography(const Raster& src, const Homography& H, int out_h, int out_w,
                          kernels::Isa isa = kernels::best());

/// out(p) = src(p - shift), bilinear.
Raster translate(const Raster& src, const Vec2& shift, kernels::Isa isa = kernels::best());

struct BBox {
  int x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // inclusive
  bool empty() const { return x1 < x0 || y1 < y0; }
};

BBox mask_bbox(const std::vector<std::uint8_t>& mask, int w, int h);

/// Mean of |a - b| over pixels valid in both (all channels). Throws
/// ErrorKind::precondition when no pixel is jointly valid or shapes differ.
double mean_abs_diff(const Raster& a, const Raster& b);

}  // namespace rhwarp
