// core/include/pcs/bands.hpp

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

#include <vector>

#include "pcs/stft.hpp"

namespace pcs {

/// One critical band: [f_low, f_high) in Hz and its perceptual importance
/// weight.
struct BandRow {
  double f_low = 0.0;
  double f_high = 0.0;
  double bif = 0.0;
};

/// Contiguous, non-overlapping critical bands with band-importance weights.
/// The default table covers 0-9500 Hz in nine bands, peaking at 0.057 over
/// 400-4400 Hz.
struct BandImportanceTable {
  std::vector<BandRow> rows;

  static BandImportanceTable default_table();

  double max_bif() const;
  double min_bif() const;

  /// Throws InvalidRange on gaps, overlaps, inverted bands, or weights
  /// outside [0, 1].
  void validate() const;
};

/// Per-FFT-bin gamma exponents realizing a stretching policy at a concrete
/// sample rate and FFT size.
struct GammaSchedule {
  enum class Kind { fixed, pcs };

  std::vector<double> gamma_per_bin;  // length fft_size/2 + 1, entries >= 0
  int fft_size = 0;
  int sample_rate = 0;
  Kind kind = Kind::fixed;

  int n_bins() const { return static_cast<int>(gamma_per_bin.size()); }
};

/// Linear band-importance -> gamma rescaling:
///   gamma[k] = (gamma_max - gamma_min) / (BIF_max - BIF_min) * BIF[k] + gamma_min
/// With the default table and (1.4, 1.0) this reproduces
/// {1.0000, 1.0702, 1.1825, 1.2877, 1.4, 1.3228, 1.2386, 1.1614, 1.0772}.
/// Throws DegenerateTable if all weights are equal, InvalidRange if
/// gamma_max <= gamma_min or gamma_min <= 0.
std::vector<double> rescale_bif(const BandImportanceTable& table,
                                double gamma_max, double gamma_min);

/// Maps each FFT bin to the gamma of the band containing its center frequency
/// bin * sample_rate / fft_size; bins outside every band get 1.0.
GammaSchedule build_schedule(const BandImportanceTable& table,
                             const StftConfig& config, int sample_rate,
                             double gamma_max = 1.4, double gamma_min = 1.0);

/// Schedule applying the same exponent to every bin. Throws InvalidRange if
/// gamma < 0.
GammaSchedule fixed_schedule(double gamma, const StftConfig& config,
                             int sample_rate);

}  // namespace pcs
