// core/include/pcs/stft.hpp

// Copyright 2026  The pcs authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "pcs/audio.hpp"

namespace pcs {

enum class Window { hann, hamming, rectangular };

/// Analysis/synthesis parameters. Windows are periodic (DFT-even), the usual
/// convention for overlap-add processing.
struct StftConfig {
  int fft_size = 512;
  int hop_size = 256;
  Window window = Window::hann;
  bool center_padding = true;

  int n_bins() const { return fft_size / 2 + 1; }
};

/// Complex time-frequency matrix, one row per frame, fft_size/2+1 columns.
/// original_length is kept so istft can truncate exactly.
struct Spectrogram {
  Eigen::MatrixXcd frames;
  StftConfig config;
  int sample_rate = 0;
  std::int64_t original_length = 0;

  Eigen::Index n_frames() const { return frames.rows(); }
  Eigen::Index n_bins() const { return frames.cols(); }
};

struct MagnitudePhase {
  Eigen::ArrayXXd magnitude;  // >= 0 elementwise
  Eigen::ArrayXXd phase;      // (-pi, pi], arg(0) := 0
};

/// Periodic window of the given size (hann: 0.5 - 0.5 cos, hamming:
/// 0.54 - 0.46 cos, both over 2*pi*n/size).
std::vector<double> make_window(Window window, int size);

/// Steady-state overlap-add profile of the squared window at the configured
/// hop: D[n] = sum_k w^2[n - k*hop], evaluated away from the edges.
struct ColaProfile {
  double min_gain = 0.0;           // min of D
  double mean_gain = 0.0;          // mean of D
  double max_rel_deviation = 0.0;  // max |D - mean| / mean
};
ColaProfile cola_profile(const StftConfig& config);

/// Validates sizes; with strict=true additionally rejects configs whose
/// squared-window overlap-add has dead spots (min gain < 1e-10), which would
/// make weighted overlap-add synthesis degenerate. Throws InvalidConfig.
void validate_config(const StftConfig& config, bool strict = false);

/// Windowed real FFT on hops. With center_padding, frame t is centered on
/// sample t*hop via reflection padding of fft_size/2 at each end. Throws
/// EmptySignal, InvalidConfig (strict mode only).
Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config,
                 bool strict_cola = false);

/// Weighted overlap-add synthesis: each inverse-transformed frame is
/// multiplied by the window again, accumulated, and normalized by the
/// per-sample sum of squared windows. Exact inverse of stft for unmodified
/// spectrograms. Throws DegenerateNormalization if the denominator falls
/// below 1e-10 at an interior sample.
AudioBuffer istft(const Spectrogram& spec);

/// magnitude = |frames|, phase = arg(frames) with arg(0) := 0.
MagnitudePhase split(const Spectrogram& spec);

/// Rebuilds a Spectrogram from magnitude/phase, taking config, sample rate
/// and original length from `like`. Throws ShapeMismatch.
Spectrogram recombine(const MagnitudePhase& mp, const Spectrogram& like);

}  // namespace pcs
