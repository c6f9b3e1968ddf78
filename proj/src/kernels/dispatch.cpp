#include <cstdlib>
#include <cstring>

#include "rhwarp/kernels.hpp"

namespace rhwarp::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(RHWARP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best() {
  static const Isa chosen = [] {
    const char* force = std::getenv("RHWARP_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "1") == 0) return Isa::scalar;
    return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

void remap_bilinear(Isa isa, const double* src, int w, int h, const double* sx, const double* sy,
                    double* dst, std::size_t n) {
#ifdef RHWARP_HAVE_AVX2
  if (isa == Isa::avx2 && available(Isa::avx2)) {
    detail::remap_bilinear_avx2(src, w, h, sx, sy, dst, n);
    return;
  }
#endif
  (void)isa;
  detail::remap_bilinear_scalar(src, w, h, sx, sy, dst, n);
}

void convolve_padded(Isa isa, const double* padded, int pw, int out_w, int out_h, const double* taps,
                     int k, int dil, double* out) {
#ifdef RHWARP_HAVE_AVX2
  if (isa == Isa::avx2 && available(Isa::avx2)) {
    detail::convolve_padded_avx2(padded, pw, out_w, out_h, taps, k, dil, out);
    return;
  }
#endif
  (void)isa;
  detail::convolve_padded_scalar(padded, pw, out_w, out_h, taps, k, dil, out);
}

}  // namespace rhwarp::kernels
