#include "pulsecut/noise.hpp"

#include <cmath>

#include "pulsecut/error.hpp"
#include "pulsecut/rng.hpp"

namespace pulsecut {

NoiseSignal gen_awgn(std::size_t length, int sample_rate, std::uint64_t seed) {
  if (length == 0) throw ParamError("gen_awgn: length must be positive");
  if (sample_rate <= 0) throw ParamError("gen_awgn: sample_rate must be positive");
  NoiseSignal noise;
  noise.sample_rate = sample_rate;
  noise.kind = NoiseKind::awgn;
  noise.samples.resize(length);
  Rng rng(seed);
  for (double& s : noise.samples) s = rng.gaussian();
  return noise;
}

PcgSignal mix_at_snr(const PcgSignal& x, const NoiseSignal& a, double snr_db, std::uint64_t seed) {
  if (x.sample_rate != a.sample_rate)
    throw ParamError("mix_at_snr: sample rates differ (resample the noise first)");
  const std::size_t n = x.samples.size();
  if (n == 0) throw ParamError("mix_at_snr: empty signal");
  if (a.samples.size() < n)
    throw ParamError("mix_at_snr: noise shorter than signal, no fragment available");

  std::size_t offset = 0;
  if (a.kind == NoiseKind::ambient) {
    Rng rng(seed);
    offset = static_cast<std::size_t>(rng.uniform_index(a.samples.size() - n + 1));
  }

  double p_x = 0.0, p_a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p_x += x.samples[i] * x.samples[i];
    p_a += a.samples[offset + i] * a.samples[offset + i];
  }
  p_x /= static_cast<double>(n);
  p_a /= static_cast<double>(n);
  if (p_a <= 0.0) throw DegenerateError("mix_at_snr: noise fragment has zero power");
  if (p_x <= 0.0) throw DegenerateError("mix_at_snr: signal has zero power");

  // 10*log10(P_x / (g^2 * P_a)) = snr_db
  const double gain = std::sqrt(p_x / (p_a * std::pow(10.0, snr_db / 10.0)));

  PcgSignal out;
  out.sample_rate = x.sample_rate;
  out.source_id = x.source_id;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] = x.samples[i] + gain * a.samples[offset + i];
  return out;
}

}  // namespace pulsecut
