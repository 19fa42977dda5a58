#pragma once

#include <cstddef>
#include <vector>

#include "pulsecut/types.hpp"

namespace pulsecut {

// Magnitude floor applied by normalize() and bandpass_mask(). Keeps every
// spectrogram entry strictly positive so the generalized-KL divergence
// never evaluates log(0) or divides by zero.
inline constexpr double kSpecFloor = 1e-8;

struct StftParams {
  int window_len = 128;  // N
  int hop = 32;          // S*N with S = 0.25
  int dft_len = 256;     // 2N
  int sample_rate = 4096;

  double hop_seconds() const { return static_cast<double>(hop) / sample_rate; }
  double bin_hz() const { return static_cast<double>(sample_rate) / dft_len; }
  int num_bins() const { return dft_len / 2 + 1; }
};

// Magnitude spectrogram, bin-major: mag[f * frames + t]. Frame t (0-based)
// windows samples [t*hop, t*hop + N). After normalize() entries lie in
// [kSpecFloor, 1]; after bandpass_mask() out-of-band bins are exactly
// kSpecFloor in every frame.
struct Spectrogram {
  std::vector<double> mag;
  int bins = 0;    // F = dft_len/2 + 1
  int frames = 0;  // T
  StftParams params;
  double band_lo_hz = 0.0;
  double band_hi_hz = 0.0;  // == sample_rate/2 when no mask was applied

  double& at(int f, int t) { return mag[static_cast<std::size_t>(f) * frames + t]; }
  double at(int f, int t) const { return mag[static_cast<std::size_t>(f) * frames + t]; }

  // Inclusive bin range [lo, hi] whose centers fall inside the band.
  int band_lo_bin() const;
  int band_hi_bin() const;
};

// Hamming-windowed magnitude STFT with T = floor((len - N)/hop) + 1 frames.
// dft_len must be a power of two.
Spectrogram stft(const PcgSignal& sig, const StftParams& p);

// Divides by the global maximum, then floors at kSpecFloor. Idempotent up
// to the floor.
Spectrogram normalize(const Spectrogram& spec);

// Sets bins whose center frequency k*(rate/dft_len) lies strictly outside
// [f_lo, f_hi] to exactly kSpecFloor.
Spectrogram bandpass_mask(const Spectrogram& spec, double f_lo, double f_hi);

}  // namespace pulsecut
