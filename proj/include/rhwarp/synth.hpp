#pragma once

// Seeded fixtures shared by the verification suite and the tests.

#include <cstdint>
#include <random>

#include "rhwarp/raster.hpp"
#include "rhwarp/so3py.hpp"

namespace rhwarp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform on the unit sphere.
  Vec3 direction();
  /// Uniform (Haar) rotation.
  Rotation3 rotation();
  /// PY vector with uniform direction and |alpha| uniform in [lo, hi).
  PYVec py(double lo, double hi);
  /// Plausible pinhole camera: f in [200, 800], small skew, principal
  /// point near the centre of a w x h raster.
  Camera camera(int w = 640, int h = 480);

 private:
  std::mt19937_64 gen_;
};

/// Band-limited test image in [0.1, 0.9]: a few low-frequency sinusoids,
/// wavelengths at least a quarter of the shorter side.
Raster smooth_image(int h, int w, int channels = 1, std::uint64_t seed = 0);

}  // namespace rhwarp
