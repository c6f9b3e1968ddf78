#include <algorithm>
#include <cmath>

#include "rhwarp/kernels.hpp"

namespace rhwarp::kernels::detail {

void remap_bilinear_scalar(const double* src, int w, int h, const double* sx, const double* sy,
                           double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const int x0 = std::clamp(static_cast<int>(std::floor(sx[i])), 0, w - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(sy[i])), 0, h - 1);
    const int x1 = std::min(x0 + 1, w - 1);
    const int y1 = std::min(y0 + 1, h - 1);
    const double fx = sx[i] - static_cast<double>(x0);
    const double fy = sy[i] - static_cast<double>(y0);
    const double a = src[y0 * w + x0];
    const double b = src[y0 * w + x1];
    const double c = src[y1 * w + x0];
    const double d = src[y1 * w + x1];
    const double gx = 1.0 - fx;
    const double gy = 1.0 - fy;
    dst[i] = (a * gx + b * fx) * gy + (c * gx + d * fx) * fy;
  }
}

void convolve_padded_scalar(const double* padded, int pw, int out_w, int out_h, const double* taps,
                            int k, int dil, double* out) {
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) {
        const double* row = padded + static_cast<std::ptrdiff_t>(y + (k - 1 - i) * dil) * pw + x;
        for (int j = 0; j < k; ++j) acc += row[(k - 1 - j) * dil] * taps[i * k + j];
      }
      out[static_cast<std::ptrdiff_t>(y) * out_w + x] = acc;
    }
  }
}

}  // namespace rhwarp::kernels::detail
