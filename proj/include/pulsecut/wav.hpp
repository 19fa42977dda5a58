#pragma once

#include <string>

#include "pulsecut/types.hpp"

namespace pulsecut {

// Reads a mono PCM WAV file (16/24/32-bit integer or 32-bit float).
// Samples are scaled to [-1, 1]; the rate comes from the header.
// Throws IoError on a missing/unreadable file, FormatError on anything
// that is not mono uncompressed WAV with a non-empty data chunk.
PcgSignal load_wav(const std::string& path);

// Writes a mono 32-bit float WAV file. Doubles are narrowed to float;
// values outside [-1, 1] are written as-is (IEEE float WAV permits it).
void save_wav(const std::string& path, const PcgSignal& sig);

}  // namespace pulsecut
