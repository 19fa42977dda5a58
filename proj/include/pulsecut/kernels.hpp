#pragma once

#include <string>

namespace pulsecut::kernels {

// One row of the generalized-KL dissimilarity matrix:
//
//   row[j] = sum_{f = f_lo}^{f_hi}  x_f*(log x_f - log y_fj) - x_f + y_fj
//
// where x_f = mags[f*frames + i] and y_fj = mags[f*frames + j]. Logs are
// precomputed by the caller (logs[f*frames + t] = log(mags[f*frames + t])),
// which turns the inner loop into pure mul/add arithmetic.
//
// Contract shared by every backend: each row[j] accumulates in ascending
// f order with the term evaluated as ((x*(lx - ly) - x) + y). SIMD
// backends vectorize across j, one lane per column, so all backends
// return bit-identical rows. The kernel translation units are compiled
// with FP contraction off to keep that guarantee.
using KlRowFn = void (*)(const double* mags, const double* logs, int frames, int f_lo, int f_hi,
                         int i, double* row);

enum class Backend { scalar, avx2, neon };

const char* to_string(Backend b);

// True when the backend exists in this build and the CPU supports it.
bool backend_supported(Backend b);

// Backend used by kl_row(); defaults to the widest supported one.
Backend active_backend();

// Forces a backend (tests, diagnostics). Throws ParamError when the
// backend is not supported on this machine.
void set_backend(Backend b);
void reset_backend();  // back to autodetect

void kl_row(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
            double* row);

// Direct access for equivalence tests.
void kl_row_scalar(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                   double* row);
#if defined(__x86_64__) || defined(_M_X64)
void kl_row_avx2(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                 double* row);
#endif
#if defined(__aarch64__)
void kl_row_neon(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
                 double* row);
#endif

}  // namespace pulsecut::kernels
