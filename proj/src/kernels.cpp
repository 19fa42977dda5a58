#include "pulsecut/kernels.hpp"

#include <atomic>

#include "pulsecut/error.hpp"

namespace pulsecut::kernels {

namespace {

Backend detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;  // NEON is baseline on aarch64
#endif
  return Backend::scalar;
}

std::atomic<int> g_forced{-1};  // -1 = autodetect

Backend resolve() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Backend>(forced);
  static const Backend best = detect_best();
  return best;
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return resolve(); }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw ParamError(std::string("kernel backend not supported here: ") + to_string(b));
  g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_forced.store(-1, std::memory_order_relaxed); }

void kl_row(const double* mags, const double* logs, int frames, int f_lo, int f_hi, int i,
            double* row) {
  switch (resolve()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      kl_row_avx2(mags, logs, frames, f_lo, f_hi, i, row);
      return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      kl_row_neon(mags, logs, frames, f_lo, f_hi, i, row);
      return;
#endif
    default:
      kl_row_scalar(mags, logs, frames, f_lo, f_hi, i, row);
      return;
  }
}

}  // namespace pulsecut::kernels
