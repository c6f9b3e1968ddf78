#pragma once

// Resampling between the pixel (P^2) domain and regular PY grids.
//
// A PY raster's pix2cal maps pixels to image-aligned warp coordinates
// q = (a1, -a0) (see so3py.hpp); calibrated point u and q are related by
// the radial rule |u| = tan|q| with equal polar angle.

#include <cstdint>
#include <vector>

#include "rhwarp/raster.hpp"
#include "rhwarp/so3py.hpp"

namespace rhwarp {

/// Bounding box of the camera's image rectangle in warp coordinates.
struct WarpBox {
  Vec2 lo;
  Vec2 hi;
};
WarpBox py_footprint(const Camera& cam);

/// Pixel -> warp-coordinate map for an out_h x out_w PY raster chosen so
/// the warped image rectangle's bounding box fills the output with
/// isotropic spacing.
Affine2 fit_py_grid(const Camera& cam, int out_h, int out_w);

/// Isotropic PY grid with the given spacing (radians per pixel) whose
/// central pixel position sits at warp coordinate `center`.
Affine2 py_grid_with_spacing(double spacing, int out_h, int out_w, const Vec2& center = Vec2::Zero());

/// Source pixel positions in `cam` for every pixel of a PY grid.
SourceMap py_source_map(const Camera& cam, const Affine2& pix2q, int out_h, int out_w);

/// Resample a camera image onto a PY grid (fitted, or given).
Raster warp_to_py(const Raster& img, const Camera& cam, int out_h, int out_w,
                  kernels::Isa isa = kernels::best());
Raster warp_to_py(const Raster& img, const Camera& cam, int out_h, int out_w, const Affine2& pix2q,
                  kernels::Isa isa = kernels::best());

/// Output pixel -> camera pixel for an out_h x out_w rendering of the
/// camera's image (pixel-center aligned rescale; identity at native size).
Affine2 camera_resize_map(const Camera& cam, int out_h, int out_w);

/// Resample a PY raster back to the camera's pixel domain.
Raster warp_from_py(const Raster& img_py, const Camera& cam, int out_h, int out_w,
                    kernels::Isa isa = kernels::best());

/// Nearest-neighbour mask transport along the same maps.
std::vector<std::uint8_t> warp_mask_to_py(const std::vector<std::uint8_t>& mask, const Camera& cam,
                                          const Affine2& pix2q, int out_h, int out_w);
std::vector<std::uint8_t> warp_mask_from_py(const std::vector<std::uint8_t>& mask_py, int py_h, int py_w,
                                            const Affine2& pix2q, const Camera& cam, int out_h, int out_w);

struct PYPoseTarget {
  PYVec alpha;  // Lie-algebra convention
  double s = 1.0;
};

/// alpha = plane_to_py(project(t)), s = |t|. Throws behind_camera for
/// t2 <= 0.
PYPoseTarget target_to_py(const Vec3& t);

/// s * exp_py(alpha) e2. Throws precondition for s <= 0, out_of_domain for
/// |alpha| >= pi/2.
Vec3 target_from_py(const PYPoseTarget& tgt);

/// Pixel position of a target's PY position in a PY raster.
Vec2 target_py_pixel(const PYPoseTarget& tgt, const Affine2& pix2q);

/// exp_py(min_py_log(theta)): rotation taking e2 to the viewing ray theta.
Rotation3 pixel_frame(const SpherePoint& theta);

}  // namespace rhwarp
