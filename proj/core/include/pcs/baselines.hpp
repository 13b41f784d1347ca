// core/include/pcs/baselines.hpp

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

#include "pcs/stft.hpp"

namespace pcs {

/// Decision-directed Wiener parameters. The noise PSD is estimated from the
/// leading frames, assumed speech-free.
struct WienerConfig {
  int noise_estimation_frames = 6;
  double smoothing_alpha = 0.98;  // a priori SNR smoothing, in (0,1)
  double gain_floor = 0.1;        // spectral gain lower bound, in (0,1)
};

/// Spectral-gain Wiener filter with decision-directed a priori SNR:
///   xi_t = alpha * G_{t-1}^2 * post_{t-1} + (1-alpha) * max(post_t - 1, 0)
///   G_t  = clamp(xi_t / (1 + xi_t), gain_floor, 1)
/// applied to the magnitude, recombined with the noisy phase. Throws
/// SignalTooShort if length < noise_estimation_frames*hop + fft_size.
AudioBuffer wiener_enhance(const AudioBuffer& noisy, const StftConfig& config,
                           const WienerConfig& wiener);

/// Magnitude spectral subtraction with oversubtraction and a relative floor:
///   |Y| = max(|X| - oversubtraction * noise_mag, floor * |X|)
/// noise_mag is the mean magnitude of the leading noise_frames frames.
/// Throws SignalTooShort, InvalidRange.
AudioBuffer spectral_subtraction(const AudioBuffer& noisy, const StftConfig& config,
                                 double oversubtraction, double floor,
                                 int noise_frames = 6);

/// Whole-matrix min-max normalization to [0, 1]; a constant matrix maps to
/// all zeros.
Eigen::ArrayXXd minmax_normalize(const Eigen::ArrayXXd& magnitude);

/// Histogram equalization along the time axis of each frequency bin: each
/// value is mapped through the bin's empirical CDF (midpoint rank convention
/// for ties) and rescaled to the bin's original [min, max]. Constant bins
/// pass through. n_levels is accepted for symmetry with adaptive_equalize
/// and bounds nothing here; the empirical CDF is exact.
Eigen::ArrayXXd histogram_equalize(const Eigen::ArrayXXd& magnitude, int n_levels);

/// Contrast-limited adaptive histogram equalization over time tiles of each
/// bin. Tile histograms are clipped at clip_limit times the uniform height
/// (tile_count / n_levels) with the excess redistributed, and per-frame
/// outputs are linearly blended between neighboring tile mappings. Outputs
/// stay within each bin's original [min, max]. tile_frames > n_frames falls
/// back to whole-utterance histogram_equalize.
Eigen::ArrayXXd adaptive_equalize(const Eigen::ArrayXXd& magnitude, int tile_frames,
                                  double clip_limit, int n_levels);

}  // namespace pcs
