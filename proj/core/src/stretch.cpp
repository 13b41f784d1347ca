// core/src/stretch.cpp

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

#include "pcs/stretch.hpp"

#include <cmath>

#include "pcs/feature_file.hpp"

namespace pcs {
namespace {

void check_schedule(const GammaSchedule& schedule, Eigen::Index n_bins) {
  if (static_cast<Eigen::Index>(schedule.gamma_per_bin.size()) != n_bins)
    throw Error(Errc::shape_mismatch,
                "schedule has " + std::to_string(schedule.gamma_per_bin.size()) +
                    " bins, magnitude has " + std::to_string(n_bins));
}

Eigen::ArrayXXd log1p_magnitude(const Spectrogram& spec) {
  Eigen::ArrayXXd out(spec.n_frames(), spec.n_bins());
  for (Eigen::Index t = 0; t < spec.n_frames(); ++t)
    for (Eigen::Index b = 0; b < spec.n_bins(); ++b)
      out(t, b) = std::log1p(std::abs(spec.frames(t, b)));
  return out;
}

}  // namespace

Eigen::ArrayXXd stretch_magnitude(const Eigen::ArrayXXd& magnitude,
                                  const GammaSchedule& schedule) {
  check_schedule(schedule, magnitude.cols());
  if ((magnitude < 0.0).any())
    throw Error(Errc::negative_magnitude, "magnitude matrix has negative entries");

  Eigen::ArrayXXd out(magnitude.rows(), magnitude.cols());
  for (Eigen::Index b = 0; b < magnitude.cols(); ++b) {
    const double gamma = schedule.gamma_per_bin[static_cast<std::size_t>(b)];
    for (Eigen::Index t = 0; t < magnitude.rows(); ++t)
      out(t, b) = std::expm1(gamma * std::log1p(magnitude(t, b)));
  }
  return out;
}

AudioBuffer pp_pcs(const AudioBuffer& noisy, const StftConfig& config,
                   const GammaSchedule& schedule) {
  validate(noisy);
  if (schedule.fft_size != config.fft_size)
    throw Error(Errc::shape_mismatch, "schedule was built for a different fft_size");
  if (schedule.kind == GammaSchedule::Kind::pcs &&
      schedule.sample_rate != noisy.sample_rate)
    throw Error(Errc::shape_mismatch,
                "PCS schedule was built for a different sample rate");

  const Spectrogram spec = stft(noisy, config);
  MagnitudePhase mp = split(spec);
  mp.magnitude = stretch_magnitude(mp.magnitude, schedule);
  AudioBuffer out = istft(recombine(mp, spec));

  const double in_peak = peak(noisy);
  const double out_peak = peak(out);
  if (out_peak > 0.0) {
    const double scale = in_peak / out_peak;
    for (double& s : out.samples) s *= scale;
  }
  return out;
}

std::pair<std::filesystem::path, std::filesystem::path> export_training_targets(
    const AudioBuffer& clean, const AudioBuffer& noisy, const StftConfig& config,
    const GammaSchedule& schedule, const std::filesystem::path& out_dir,
    const std::string& file_id) {
  validate(clean);
  validate(noisy);
  if (clean.length() != noisy.length())
    throw Error(Errc::length_mismatch,
                "clean and noisy lengths differ for " + file_id);
  if (clean.sample_rate != noisy.sample_rate)
    throw Error(Errc::length_mismatch,
                "clean and noisy sample rates differ for " + file_id);

  const Spectrogram noisy_spec = stft(noisy, config);
  const Spectrogram clean_spec = stft(clean, config);

  const Eigen::ArrayXXd input = log1p_magnitude(noisy_spec);
  Eigen::ArrayXXd target = log1p_magnitude(clean_spec);
  check_schedule(schedule, target.cols());
  for (Eigen::Index b = 0; b < target.cols(); ++b)
    target.col(b) *= schedule.gamma_per_bin[static_cast<std::size_t>(b)];

  const auto in_path = out_dir / (file_id + ".in.pcsf");
  const auto tgt_path = out_dir / (file_id + ".tgt.pcsf");
  const auto rate = static_cast<double>(noisy.sample_rate);
  const auto fft = static_cast<std::uint32_t>(config.fft_size);
  const auto hop = static_cast<std::uint32_t>(config.hop_size);
  write_pcsf(in_path, input, rate, fft, hop);
  write_pcsf(tgt_path, target, rate, fft, hop);
  return {in_path, tgt_path};
}

}  // namespace pcs
