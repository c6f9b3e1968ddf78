#pragma once

// Discrete PY group convolution
//   (F * G)(q) = sum_b F(q - b) G(b) spacing^2
// on isotropic PY rasters, with zero padding outside F's valid region and
// the validity mask eroded by the kernel footprint.

#include <vector>

#include "rhwarp/pywarp.hpp"

namespace rhwarp {

struct PYKernel {
  int k = 1;
  double spacing = 1.0;         // PY radians between taps
  std::vector<double> weights;  // k x k, row-major; row index along q1

  /// Throws ErrorKind::invalid_argument unless k is odd, weights has k*k
  /// finite entries and spacing is positive.
  void validate() const;

  static PYKernel impulse(double spacing, int k = 1);
};

/// Convolution on the raster's own pixel grid with taps `dilation` pixels
/// apart; each tap weighted by G.spacing^2.
Raster convolve_raster(const Raster& F, const PYKernel& G, int dilation, kernels::Isa isa = kernels::best());

/// Requires F.pix2cal to be an isotropic unrotated grid whose spacing
/// divides G.spacing; throws ErrorKind::precondition otherwise.
Raster py_convolve(const Raster& F, const PYKernel& G, kernels::Isa isa = kernels::best());

/// PY grid (spacing G.spacing, centred at q = 0) covering the camera's
/// warped image rectangle.
Affine2 covering_py_grid(const Camera& cam, double spacing, int& rows, int& cols);

struct EquivarianceReport {
  double err_py = 0.0;
  double err_p2 = 0.0;
};

/// Rotate img by exp(alpha) (rotational homography) and compare
///   PY:  conv(PY(rotated))   against conv(PY(img))   shifted by q_alpha
///   P^2: conv(rotated)       against conv(img)       shifted by H pp - pp
/// as mean absolute differences over jointly valid pixels.
EquivarianceReport equivariance_report(const Raster& img, const Camera& cam, const PYKernel& G, PYVec alpha,
                                       kernels::Isa isa = kernels::best());

}  // namespace rhwarp
