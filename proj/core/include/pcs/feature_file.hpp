// core/include/pcs/feature_file.hpp

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
#include <cstdint>
#include <filesystem>

namespace pcs {

/// PCSF feature container, little-endian on disk:
///   "PCSF" magic, u32 version (=1), u32 n_frames, u32 n_bins,
///   f64 sample_rate, u32 fft_size, u32 hop_size,
///   then n_frames * n_bins IEEE-754 f32 values, frame-major.
/// No padding, no checksum.
struct FeatureFile {
  Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> values;
  double sample_rate = 0.0;
  std::uint32_t fft_size = 0;
  std::uint32_t hop_size = 0;

  std::uint32_t n_frames() const { return static_cast<std::uint32_t>(values.rows()); }
  std::uint32_t n_bins() const { return static_cast<std::uint32_t>(values.cols()); }
};

/// Writes features to disk, casting to f32. Throws IoError.
void write_pcsf(const std::filesystem::path& path, const Eigen::ArrayXXd& values,
                double sample_rate, std::uint32_t fft_size, std::uint32_t hop_size);

/// Throws MissingFile, CorruptHeader (bad magic/version/size), IoError.
FeatureFile read_pcsf(const std::filesystem::path& path);

}  // namespace pcs
