#pragma once

#include <cstdint>

#include "pulsecut/types.hpp"

namespace pulsecut {

// Seeded zero-mean unit-variance white Gaussian noise.
NoiseSignal gen_awgn(std::size_t length, int sample_rate, std::uint64_t seed);

// Returns x + g * a_fragment with g chosen so that
// 10*log10(P_x / P_{g*a}) == snr_db, powers measured as mean squared
// amplitude over the full mixed extent. For ambient noise a random
// contiguous fragment of `a` is selected by `seed`; AWGN uses offset 0.
// Deterministic given seed.
PcgSignal mix_at_snr(const PcgSignal& x, const NoiseSignal& a, double snr_db, std::uint64_t seed);

}  // namespace pulsecut
