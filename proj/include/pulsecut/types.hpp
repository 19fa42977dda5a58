#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pulsecut {

// Single-channel PCG recording, amplitude-normalized to [-1, 1].
struct PcgSignal {
  std::vector<double> samples;
  int sample_rate = 0;
  std::string source_id;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

enum class NoiseKind { awgn, ambient };

struct NoiseSignal {
  std::vector<double> samples;
  int sample_rate = 0;
  NoiseKind kind = NoiseKind::awgn;
};

enum class BeatLabel : std::uint8_t { S1, S2 };

inline const char* to_string(BeatLabel l) {
  return l == BeatLabel::S1 ? "S1" : "S2";
}

struct Beat {
  std::int64_t position = 0;  // sample index, 0-based
  BeatLabel label = BeatLabel::S1;
};

// Ground-truth or detector-output beat list for one recording.
struct AnnotationSet {
  std::vector<Beat> beats;
  int sample_rate = 0;
  // False when the file's labels do not alternate S1,S2,... Real-world
  // annotations sometimes omit beats, so this is a flag, not an error.
  bool alternating = true;
};

}  // namespace pulsecut
