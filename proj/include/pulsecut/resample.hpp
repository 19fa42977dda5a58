#pragma once

#include "pulsecut/types.hpp"

namespace pulsecut {

// Band-limited rate conversion with a Kaiser-windowed sinc interpolator
// (beta = 8, 64-tap half-width at the lower of the two rates). Output
// length is round(len * target / source). Returns the input unchanged
// when target == source.
PcgSignal resample(const PcgSignal& sig, int target_rate);

}  // namespace pulsecut
