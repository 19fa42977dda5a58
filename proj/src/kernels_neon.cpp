// NEON kernel for aarch64. Two lanes per register; same per-entry
// operation order as the scalar reference.

#include "pulsecut/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

namespace pulsecut::kernels {

void kl_row_neon(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                 double* row) {
  std::memset(row, 0, sizeof(double) * static_cast<std::size_t>(frames));
  const int simd_end = frames & ~1;
  for (int f = f_lo; f <= f_hi; ++f) {
    const double* y = mags + static_cast<std::size_t>(f) * frames;
    const double* ly = logs + static_cast<std::size_t>(f) * frames;
    const double x = y[i];
    const double lx = ly[i];
    const float64x2_t vx = vdupq_n_f64(x);
    const float64x2_t vlx = vdupq_n_f64(lx);
    for (int j = 0; j < simd_end; j += 2) {
      const float64x2_t vy = vld1q_f64(y + j);
      const float64x2_t vly = vld1q_f64(ly + j);
      const float64x2_t diff = vsubq_f64(vlx, vly);
      const float64x2_t prod = vmulq_f64(vx, diff);
      const float64x2_t term = vaddq_f64(vsubq_f64(prod, vx), vy);
      vst1q_f64(row + j, vaddq_f64(vld1q_f64(row + j), term));
    }
    for (int j = simd_end; j < frames; ++j) {
      row[j] += x * (lx - ly[j]) - x + y[j];
    }
  }
  row[i] = 0.0;
}

}  // namespace pulsecut::kernels

#endif  // __aarch64__
