#include "pulsecut/stft.hpp"

#include <cmath>
#include <complex>

#include "pulsecut/error.hpp"

namespace pulsecut {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

// In-place iterative radix-2 FFT.
void fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

void validate(const StftParams& p) {
  if (p.window_len <= 0 || p.hop <= 0 || p.hop > p.window_len || p.window_len > p.dft_len)
    throw ParamError("stft: need 0 < hop <= window_len <= dft_len");
  if (!is_pow2(p.dft_len)) throw ParamError("stft: dft_len must be a power of two");
  if (p.sample_rate <= 0) throw ParamError("stft: sample_rate must be positive");
}

}  // namespace

int Spectrogram::band_lo_bin() const {
  const double hz = params.bin_hz();
  int k = static_cast<int>(std::ceil(band_lo_hz / hz));
  // ceil can land one bin low through rounding at exact multiples
  while (k * hz < band_lo_hz) ++k;
  if (k < 0) k = 0;
  return k;
}

int Spectrogram::band_hi_bin() const {
  const double hz = params.bin_hz();
  int k = static_cast<int>(std::floor(band_hi_hz / hz));
  while (k * hz > band_hi_hz) --k;
  if (k > bins - 1) k = bins - 1;
  return k;
}

Spectrogram stft(const PcgSignal& sig, const StftParams& p) {
  validate(p);
  const int n = p.window_len;
  const std::size_t len = sig.samples.size();
  if (len < static_cast<std::size_t>(n))
    throw ParamError("stft: signal shorter than one window");

  const int frames = static_cast<int>((len - static_cast<std::size_t>(n)) / p.hop) + 1;
  const int bins = p.num_bins();

  std::vector<double> window(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    window[i] = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (n - 1));

  Spectrogram spec;
  spec.bins = bins;
  spec.frames = frames;
  spec.params = p;
  spec.band_lo_hz = 0.0;
  spec.band_hi_hz = p.sample_rate / 2.0;
  spec.mag.assign(static_cast<std::size_t>(bins) * frames, 0.0);

  std::vector<std::complex<double>> buf(static_cast<std::size_t>(p.dft_len));
  for (int t = 0; t < frames; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * p.hop;
    for (int i = 0; i < n; ++i) buf[i] = sig.samples[start + i] * window[i];
    for (int i = n; i < p.dft_len; ++i) buf[i] = 0.0;
    fft(buf);
    for (int f = 0; f < bins; ++f) spec.at(f, t) = std::abs(buf[f]);
  }
  return spec;
}

Spectrogram normalize(const Spectrogram& spec) {
  double max_mag = 0.0;
  for (double v : spec.mag) max_mag = std::max(max_mag, v);
  if (max_mag <= 0.0) throw DegenerateError("normalize: all-zero spectrogram");

  Spectrogram out = spec;
  for (double& v : out.mag) {
    v /= max_mag;
    if (v < kSpecFloor) v = kSpecFloor;
  }
  return out;
}

Spectrogram bandpass_mask(const Spectrogram& spec, double f_lo, double f_hi) {
  const double nyquist = spec.params.sample_rate / 2.0;
  if (f_lo < 0.0 || f_lo >= f_hi || f_hi > nyquist)
    throw ParamError("bandpass_mask: need 0 <= f_lo < f_hi <= rate/2");

  Spectrogram out = spec;
  out.band_lo_hz = f_lo;
  out.band_hi_hz = f_hi;
  const double hz = spec.params.bin_hz();
  for (int f = 0; f < spec.bins; ++f) {
    const double center = f * hz;
    if (center < f_lo || center > f_hi) {
      for (int t = 0; t < spec.frames; ++t) out.at(f, t) = kSpecFloor;
    }
  }
  return out;
}

}  // namespace pulsecut
