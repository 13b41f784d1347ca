// core/include/pcs/stretch.hpp

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

#include <filesystem>
#include <string>
#include <utility>

#include "pcs/bands.hpp"
#include "pcs/stft.hpp"

namespace pcs {

/// Per-bin contrast stretching in the log1p domain:
///   Y[t,b] = expm1(gamma[b] * log1p(M[t,b]))
/// which equals (1+M)^gamma - 1 but stays stable at M = 0. Output is >= 0
/// and >= input wherever gamma >= 1. Throws NegativeMagnitude, ShapeMismatch.
Eigen::ArrayXXd stretch_magnitude(const Eigen::ArrayXXd& magnitude,
                                  const GammaSchedule& schedule);

/// Waveform post-processing pipeline: STFT, stretch the magnitude, recombine
/// with the original phase, inverse STFT, then rescale so the output peak
/// matches the input peak (no-op on all-zero signals). Output length equals
/// input length.
AudioBuffer pp_pcs(const AudioBuffer& noisy, const StftConfig& config,
                   const GammaSchedule& schedule);

/// Writes the training feature pair for one utterance:
///   <file_id>.in.pcsf   log1p of the noisy magnitude spectrogram
///   <file_id>.tgt.pcsf  gamma[b] * log1p of the clean magnitude spectrogram
/// Returns the two paths (input first). Throws LengthMismatch, IoError.
std::pair<std::filesystem::path, std::filesystem::path> export_training_targets(
    const AudioBuffer& clean, const AudioBuffer& noisy, const StftConfig& config,
    const GammaSchedule& schedule, const std::filesystem::path& out_dir,
    const std::string& file_id);

}  // namespace pcs
