#include "rhwarp/synth.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>

namespace rhwarp {

Vec3 Rng::direction() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Rotation3 Rng::rotation() {
  // Shoemake's uniform quaternion.
  const double u1 = unit(), u2 = uniform(0.0, 2.0 * kPi), u3 = uniform(0.0, 2.0 * kPi);
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const Eigen::Quaterniond q(b * std::cos(u3), a * std::sin(u2), a * std::cos(u2), b * std::sin(u3));
  return Rotation3::nearest(q.toRotationMatrix());
}

PYVec Rng::py(double lo, double hi) {
  const double r = uniform(lo, hi);
  const double phi = uniform(0.0, 2.0 * kPi);
  return {r * std::cos(phi), r * std::sin(phi)};
}

Camera Rng::camera(int w, int h) {
  const double fx = uniform(200.0, 800.0);
  const double fy = fx * uniform(0.9, 1.1);
  Mat3 K = Mat3::Identity();
  K(0, 0) = fx;
  K(1, 1) = fy;
  K(0, 1) = uniform(-2.0, 2.0);
  K(0, 2) = (w - 1) / 2.0 + uniform(-20.0, 20.0);
  K(1, 2) = (h - 1) / 2.0 + uniform(-20.0, 20.0);
  return Camera(K, w, h);
}

Raster smooth_image(int h, int w, int channels, std::uint64_t seed) {
  Rng rng(seed);
  Raster img(h, w, channels);
  const double span = std::min(w, h);
  for (int c = 0; c < channels; ++c) {
    struct Wave {
      double kx, ky, phase, amp;
    };
    Wave waves[3];
    for (Wave& wv : waves) {
      const double wavelength = rng.uniform(0.25, 1.0) * span;
      const double dir = rng.uniform(0.0, 2.0 * kPi);
      wv = {2.0 * kPi * std::cos(dir) / wavelength, 2.0 * kPi * std::sin(dir) / wavelength,
            rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.05, 0.13)};
    }
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double v = 0.5;
        for (const Wave& wv : waves) v += wv.amp * std::sin(wv.kx * x + wv.ky * y + wv.phase);
        img.at(c, y, x) = v;
      }
  }
  return img;
}

}  // namespace rhwarp
