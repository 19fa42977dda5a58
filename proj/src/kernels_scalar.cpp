// Reference kernel. Compiled with -ffp-contract=off so the expression
// below is not FMA-contracted; the SIMD backends replay the identical
// mul/sub/add sequence per lane.

#include "pulsecut/kernels.hpp"

#include <cstring>

namespace pulsecut::kernels {

void kl_row_scalar(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                   double* row) {
  std::memset(row, 0, sizeof(double) * static_cast<std::size_t>(frames));
  for (int f = f_lo; f <= f_hi; ++f) {
    const double* y = mags + static_cast<std::size_t>(f) * frames;
    const double* ly = logs + static_cast<std::size_t>(f) * frames;
    const double x = y[i];
    const double lx = ly[i];
    for (int j = 0; j < frames; ++j) {
      row[j] += x * (lx - ly[j]) - x + y[j];
    }
  }
  row[i] = 0.0;
}

}  // namespace pulsecut::kernels
