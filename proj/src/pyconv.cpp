#include "rhwarp/pyconv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rhwarp/error.hpp"

namespace rhwarp {

void PYKernel::validate() const {
  if (k < 1 || k % 2 == 0) fail(ErrorKind::invalid_argument, "PYKernel: k must be odd and positive");
  if (weights.size() != static_cast<std::size_t>(k) * k)
    fail(ErrorKind::invalid_argument, "PYKernel: expected k*k weights");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) fail(ErrorKind::invalid_argument, "PYKernel: spacing must be positive");
  for (double w : weights)
    if (!std::isfinite(w)) fail(ErrorKind::invalid_argument, "PYKernel: weights must be finite");
}

PYKernel PYKernel::impulse(double spacing, int k) {
  PYKernel g;
  g.k = k;
  g.spacing = spacing;
  g.weights.assign(static_cast<std::size_t>(k) * k, 0.0);
  g.weights[static_cast<std::size_t>(k / 2) * k + k / 2] = 1.0;
  return g;
}

namespace {

// ok[i] = all of in[i + off] valid for off in {-r*d, ..., r*d} step d, inside [0, n).
void erode_line(const std::uint8_t* in, std::ptrdiff_t stride, int n, int r, int d, std::uint8_t* out) {
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int o = -r; o <= r && ok; ++o) {
      const int j = i + o * d;
      ok = j >= 0 && j < n && in[j * stride] != 0;
    }
    out[i * stride] = ok ? 1 : 0;
  }
}

}  // namespace

Raster convolve_raster(const Raster& F, const PYKernel& G, int dilation, kernels::Isa isa) {
  G.validate();
  if (dilation < 1) fail(ErrorKind::invalid_argument, "convolve_raster: dilation must be >= 1");
  const int w = F.width();
  const int h = F.height();
  const int hk = G.k / 2;
  const int margin = hk * dilation;
  const int pw = w + 2 * margin;
  const int ph = h + 2 * margin;

  std::vector<double> taps(G.weights.size());
  const double measure = G.spacing * G.spacing;
  for (std::size_t i = 0; i < taps.size(); ++i) taps[i] = G.weights[i] * measure;

  Raster out(h, w, F.channels(), F.pix2cal());
  std::vector<double> padded(static_cast<std::size_t>(pw) * ph);
  for (int c = 0; c < F.channels(); ++c) {
    std::fill(padded.begin(), padded.end(), 0.0);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (F.valid(y, x)) padded[static_cast<std::size_t>(y + margin) * pw + x + margin] = F.at(c, y, x);
    kernels::convolve_padded(isa, padded.data(), pw, w, h, taps.data(), G.k, dilation, out.plane(c));
  }

  std::vector<std::uint8_t> rows(F.mask().size());
  for (int y = 0; y < h; ++y)
    erode_line(F.mask().data() + static_cast<std::size_t>(y) * w, 1, w, hk, dilation, rows.data() + static_cast<std::size_t>(y) * w);
  auto& valid = out.mask();
  for (int x = 0; x < w; ++x) erode_line(rows.data() + x, w, h, hk, dilation, valid.data() + x);
  out.zero_invalid();
  return out;
}

Raster py_convolve(const Raster& F, const PYKernel& G, kernels::Isa isa) {
  G.validate();
  const Mat2& A = F.pix2cal().A;
  const double sp = A(0, 0);
  if (!(sp > 0.0) || std::abs(A(1, 1) - sp) > 1e-12 * sp || A(0, 1) != 0.0 || A(1, 0) != 0.0)
    fail(ErrorKind::precondition, "py_convolve: raster is not an isotropic PY grid");
  const double ratio = G.spacing / sp;
  const double m = std::round(ratio);
  if (m < 1.0 || std::abs(ratio - m) > 1e-9 * ratio)
    fail(ErrorKind::precondition, "py_convolve: kernel spacing is not an integer multiple of the grid spacing");
  return convolve_raster(F, G, static_cast<int>(m), isa);
}

Affine2 covering_py_grid(const Camera& cam, double spacing, int& rows, int& cols) {
  const auto [lo, hi] = py_footprint(cam);
  const double hx = std::max(std::abs(lo.x()), std::abs(hi.x()));
  const double hy = std::max(std::abs(lo.y()), std::abs(hi.y()));
  cols = 2 * static_cast<int>(std::ceil(hx / spacing)) + 1;
  rows = 2 * static_cast<int>(std::ceil(hy / spacing)) + 1;
  return py_grid_with_spacing(spacing, rows, cols);
}

EquivarianceReport equivariance_report(const Raster& img, const Camera& cam, const PYKernel& G, PYVec alpha,
                                       kernels::Isa isa) {
  G.validate();
  const Homography H = rotational_homography(cam, exp_py(alpha), cam);
  const Raster rotated = warp_by_homography(img, H, cam.height(), cam.width(), isa);

  EquivarianceReport rep;
  int rows = 0, cols = 0;
  const Affine2 grid = covering_py_grid(cam, G.spacing, rows, cols);
  const Raster conv_rot = py_convolve(warp_to_py(rotated, cam, rows, cols, grid, isa), G, isa);
  const Raster conv_ref = py_convolve(warp_to_py(img, cam, rows, cols, grid, isa), G, isa);
  rep.err_py = mean_abs_diff(conv_rot, translate(conv_ref, warp_coords(alpha) / G.spacing, isa));

  const Raster pconv_rot = convolve_raster(rotated, G, 1, isa);
  const Raster pconv_ref = convolve_raster(img, G, 1, isa);
  const Vec2 pp = cam.principal_point();
  rep.err_p2 = mean_abs_diff(pconv_rot, translate(pconv_ref, apply_homography(H, pp) - pp, isa));
  return rep;
}

}  // namespace rhwarp
