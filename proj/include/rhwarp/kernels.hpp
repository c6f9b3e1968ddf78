#pragma once

// Data-parallel inner loops with a scalar reference path and an AVX2 path.
// Both paths perform the same IEEE operations in the same order (no FMA),
// so their outputs are bit-identical.

#include <cstddef>

namespace rhwarp::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool available(Isa isa);

/// Fastest available path; RHWARP_FORCE_SCALAR=1 in the environment pins
/// the scalar path.
Isa best();

/// Bilinear lookup of n points in a w x h single-channel plane.
/// Coordinates must already lie in [0, w-1] x [0, h-1].
void remap_bilinear(Isa isa, const double* src, int w, int h, const double* sx, const double* sy,
                    double* dst, std::size_t n);

/// Dilated true convolution on a zero-padded plane.
/// `padded` is pw wide with a margin of (k/2)*dil on every side of the
/// out_w x out_h interior; taps are k x k row-major and already carry the
/// measure weight.
///   out(y, x) = sum_i sum_j padded(y + (k-1-i) dil, x + (k-1-j) dil) taps(i, j)
/// accumulated in (i, j) order.
void convolve_padded(Isa isa, const double* padded, int pw, int out_w, int out_h, const double* taps,
                     int k, int dil, double* out);

namespace detail {
void remap_bilinear_scalar(const double* src, int w, int h, const double* sx, const double* sy,
                           double* dst, std::size_t n);
void convolve_padded_scalar(const double* padded, int pw, int out_w, int out_h, const double* taps,
                            int k, int dil, double* out);
#ifdef RHWARP_HAVE_AVX2
void remap_bilinear_avx2(const double* src, int w, int h, const double* sx, const double* sy,
                         double* dst, std::size_t n);
void convolve_padded_avx2(const double* padded, int pw, int out_w, int out_h, const double* taps,
                          int k, int dil, double* out);
#endif
}  // namespace detail

}  // namespace rhwarp::kernels
