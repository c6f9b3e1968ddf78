#include <immintrin.h>

#include "rhwarp/kernels.hpp"

namespace rhwarp::kernels::detail {

void remap_bilinear_avx2(const double* src, int w, int h, const double* sx, const double* sy,
                         double* dst, std::size_t n) {
  const __m128i zero = _mm_setzero_si128();
  const __m128i wmax = _mm_set1_epi32(w - 1);
  const __m128i hmax = _mm_set1_epi32(h - 1);
  const __m128i one = _mm_set1_epi32(1);
  const __m128i wv = _mm_set1_epi32(w);
  const __m256d ones = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(sx + i);
    const __m256d vy = _mm256_loadu_pd(sy + i);
    __m128i x0 = _mm256_cvttpd_epi32(_mm256_floor_pd(vx));
    __m128i y0 = _mm256_cvttpd_epi32(_mm256_floor_pd(vy));
    x0 = _mm_min_epi32(_mm_max_epi32(x0, zero), wmax);
    y0 = _mm_min_epi32(_mm_max_epi32(y0, zero), hmax);
    const __m128i x1 = _mm_min_epi32(_mm_add_epi32(x0, one), wmax);
    const __m128i y1 = _mm_min_epi32(_mm_add_epi32(y0, one), hmax);
    const __m256d fx = _mm256_sub_pd(vx, _mm256_cvtepi32_pd(x0));
    const __m256d fy = _mm256_sub_pd(vy, _mm256_cvtepi32_pd(y0));

    const __m128i r0 = _mm_mullo_epi32(y0, wv);
    const __m128i r1 = _mm_mullo_epi32(y1, wv);
    const __m256d a = _mm256_i32gather_pd(src, _mm_add_epi32(r0, x0), 8);
    const __m256d b = _mm256_i32gather_pd(src, _mm_add_epi32(r0, x1), 8);
    const __m256d c = _mm256_i32gather_pd(src, _mm_add_epi32(r1, x0), 8);
    const __m256d d = _mm256_i32gather_pd(src, _mm_add_epi32(r1, x1), 8);

    const __m256d gx = _mm256_sub_pd(ones, fx);
    const __m256d gy = _mm256_sub_pd(ones, fy);
    const __m256d top = _mm256_add_pd(_mm256_mul_pd(a, gx), _mm256_mul_pd(b, fx));
    const __m256d bot = _mm256_add_pd(_mm256_mul_pd(c, gx), _mm256_mul_pd(d, fx));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_mul_pd(top, gy), _mm256_mul_pd(bot, fy)));
  }
  if (i < n) remap_bilinear_scalar(src, w, h, sx + i, sy + i, dst + i, n - i);
}

void convolve_padded_avx2(const double* padded, int pw, int out_w, int out_h, const double* taps,
                          int k, int dil, double* out) {
  for (int y = 0; y < out_h; ++y) {
    double* orow = out + static_cast<std::ptrdiff_t>(y) * out_w;
    int x = 0;
    for (; x + 4 <= out_w; x += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (int i = 0; i < k; ++i) {
        const double* row = padded + static_cast<std::ptrdiff_t>(y + (k - 1 - i) * dil) * pw + x;
        for (int j = 0; j < k; ++j) {
          const __m256d p = _mm256_loadu_pd(row + (k - 1 - j) * dil);
          acc = _mm256_add_pd(acc, _mm256_mul_pd(p, _mm256_set1_pd(taps[i * k + j])));
        }
      }
      _mm256_storeu_pd(orow + x, acc);
    }
    for (; x < out_w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) {
        const double* row = padded + static_cast<std::ptrdiff_t>(y + (k - 1 - i) * dil) * pw + x;
        for (int j = 0; j < k; ++j) acc += row[(k - 1 - j) * dil] * taps[i * k + j];
      }
      orow[x] = acc;
    }
  }
}

}  // namespace rhwarp::kernels::detail
