// AVX2 kernel, compiled with -mavx2 (no FMA: the scalar reference rounds
// mul and add separately, and the lanes must match it bit for bit).
// Callers reach this only after a runtime cpuid check.

#include "pulsecut/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace pulsecut::kernels {

void kl_row_avx2(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                 double* row) {
  std::memset(row, 0, sizeof(double) * static_cast<std::size_t>(frames));
  const int simd_end = frames & ~3;
  for (int f = f_lo; f <= f_hi; ++f) {
    const double* y = mags + static_cast<std::size_t>(f) * frames;
    const double* ly = logs + static_cast<std::size_t>(f) * frames;
    const double x = y[i];
    const double lx = ly[i];
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vlx = _mm256_set1_pd(lx);
    for (int j = 0; j < simd_end; j += 4) {
      const __m256d vy = _mm256_loadu_pd(y + j);
      const __m256d vly = _mm256_loadu_pd(ly + j);
      const __m256d diff = _mm256_sub_pd(vlx, vly);
      const __m256d prod = _mm256_mul_pd(vx, diff);
      const __m256d term = _mm256_add_pd(_mm256_sub_pd(prod, vx), vy);
      const __m256d acc = _mm256_add_pd(_mm256_loadu_pd(row + j), term);
      _mm256_storeu_pd(row + j, acc);
    }
    for (int j = simd_end; j < frames; ++j) {
      row[j] += x * (lx - ly[j]) - x + y[j];
    }
  }
  row[i] = 0.0;
}

}  // namespace pulsecut::kernels

#endif  // x86_64
