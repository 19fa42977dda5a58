#include "pulsecut/resample.hpp"

#include <cmath>
#include <cstdint>

#include "pulsecut/error.hpp"

namespace pulsecut {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kKaiserBeta = 8.0;
constexpr int kHalfWidthTaps = 64;

// Zeroth-order modified Bessel function of the first kind, by power series.
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= half_x / k;
    const double add = term * term;
    sum += add;
    if (add < sum * 1e-18) break;
  }
  return sum;
}

double kaiser(double frac) {  // frac in [-1, 1]
  const double t = 1.0 - frac * frac;
  if (t <= 0.0) return 0.0;
  return bessel_i0(kKaiserBeta * std::sqrt(t)) / bessel_i0(kKaiserBeta);
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

}  // namespace

PcgSignal resample(const PcgSignal& sig, int target_rate) {
  if (target_rate <= 0) throw ParamError("resample: target_rate must be positive");
  if (sig.sample_rate <= 0) throw ParamError("resample: source rate must be positive");
  if (target_rate == sig.sample_rate) return sig;

  const double ratio = static_cast<double>(target_rate) / sig.sample_rate;
  // Anti-alias cutoff at the narrower Nyquist; widen the kernel by the
  // same factor when decimating.
  const double scale = ratio < 1.0 ? ratio : 1.0;
  const double half_width = kHalfWidthTaps / scale;

  const std::int64_t in_len = static_cast<std::int64_t>(sig.samples.size());
  const std::int64_t out_len = static_cast<std::int64_t>(std::llround(in_len * ratio));

  PcgSignal out;
  out.sample_rate = target_rate;
  out.source_id = sig.source_id;
  out.samples.resize(static_cast<std::size_t>(out_len));

  for (std::int64_t n = 0; n < out_len; ++n) {
    const double center = n / ratio;
    std::int64_t lo = static_cast<std::int64_t>(std::ceil(center - half_width));
    std::int64_t hi = static_cast<std::int64_t>(std::floor(center + half_width));
    if (lo < 0) lo = 0;
    if (hi > in_len - 1) hi = in_len - 1;
    double acc = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
      const double tau = center - m;
      acc += sig.samples[static_cast<std::size_t>(m)] * scale * sinc(scale * tau) *
             kaiser(tau / half_width);
    }
    out.samples[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

}  // namespace pulsecut
