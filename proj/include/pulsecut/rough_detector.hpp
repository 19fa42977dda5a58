#pragma once

#include <vector>

#include "pulsecut/stft.hpp"

namespace pulsecut {

// T x T generalized-KL divergences between spectrogram frames. Zero
// diagonal, nonnegative entries, not symmetric.
struct DissimilarityMatrix {
  std::vector<double> d;  // row-major T x T
  int frames = 0;

  double at(int i, int j) const { return d[static_cast<std::size_t>(i) * frames + j]; }
};

// Per-frame trapezoidal integral of the corresponding matrix row.
struct DivergenceProfile {
  std::vector<double> alpha;
};

// Candidate S1/S2 frames from Stage I, strictly increasing, 0-based.
struct FrameBeats {
  std::vector<int> lambdas;
};

struct PeakConfig {
  int min_sep_frames = 21;    // ceil(0.160 s / hop_seconds) at the defaults
  double rel_height = 0.25;   // keep peaks >= rel_height * max(alpha)
};

// Full matrix per the generalized-KL formula, natural log over all bins.
// Out-of-band bins of a masked spectrogram sit at the common floor and
// contribute exactly zero, so the kernel iterates the passband only;
// the result is bit-identical to the all-bins sum. `jobs` > 1 computes
// rows in parallel (each row is independent, so the sum order inside a
// row, and hence every bit of output, does not depend on the thread
// count).
DissimilarityMatrix dissimilarity_matrix(const Spectrogram& spec, int jobs = 1);

// alpha[i] = sum_j (d[i][j] + d[i][j+1]) / 2, unit spacing.
DivergenceProfile divergence_profile(const DissimilarityMatrix& dm);

// Streaming variant: computes alpha row by row without materializing the
// T x T matrix. Bit-identical to dissimilarity_matrix + divergence_profile.
DivergenceProfile divergence_profile_streaming(const Spectrogram& spec, int jobs = 1);

// Local maxima of alpha subject to a minimum separation and a relative
// height threshold; ties inside the separation window keep the earlier
// frame. Throws EmptyResult when nothing qualifies.
FrameBeats pick_beat_frames(const DivergenceProfile& prof, const PeakConfig& cfg);

}  // namespace pulsecut
