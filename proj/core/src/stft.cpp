// core/src/stft.cpp

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

#include "pcs/stft.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fft.hpp"

namespace pcs {
namespace {

constexpr double kDenominatorFloor = 1e-10;

// Reflection-padded sample lookup: index may range over [-pad, len+pad).
// Size-1 signals reflect to a constant.
double sample_reflected(const std::vector<double>& x, std::int64_t index) {
  const auto len = static_cast<std::int64_t>(x.size());
  if (index >= 0 && index < len) return x[static_cast<std::size_t>(index)];
  if (len == 1) return x[0];
  const std::int64_t period = 2 * (len - 1);
  std::int64_t m = index % period;
  if (m < 0) m += period;
  if (m >= len) m = period - m;
  return x[static_cast<std::size_t>(m)];
}

std::int64_t frame_count(std::int64_t span, int fft_size, int hop) {
  if (span <= fft_size) return 1;
  // Cover the tail: last frame may extend past the span (zero-padded).
  return 1 + (span - fft_size + hop - 1) / hop;
}

}  // namespace

std::vector<double> make_window(Window window, int size) {
  std::vector<double> w(static_cast<std::size_t>(size), 1.0);
  const double step = 2.0 * std::numbers::pi / size;
  switch (window) {
    case Window::hann:
      for (int n = 0; n < size; ++n) w[static_cast<std::size_t>(n)] = 0.5 - 0.5 * std::cos(step * n);
      break;
    case Window::hamming:
      for (int n = 0; n < size; ++n) w[static_cast<std::size_t>(n)] = 0.54 - 0.46 * std::cos(step * n);
      break;
    case Window::rectangular:
      break;
  }
  return w;
}

ColaProfile cola_profile(const StftConfig& config) {
  const int N = config.fft_size;
  const int H = config.hop_size;
  const auto w = make_window(config.window, N);

  // D is H-periodic in steady state; evaluate one window-length span starting
  // at N so every position sees its full set of overlapping frames.
  ColaProfile profile;
  profile.min_gain = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::vector<double> d(static_cast<std::size_t>(N), 0.0);
  for (int i = 0; i < N; ++i) {
    const std::int64_t p = N + i;
    for (std::int64_t k = (p - N) / H + 1; k * H <= p; ++k) {
      const std::int64_t m = p - k * H;
      if (m >= 0 && m < N) {
        const double wm = w[static_cast<std::size_t>(m)];
        d[static_cast<std::size_t>(i)] += wm * wm;
      }
    }
    profile.min_gain = std::min(profile.min_gain, d[static_cast<std::size_t>(i)]);
    sum += d[static_cast<std::size_t>(i)];
  }
  profile.mean_gain = sum / N;
  for (double v : d)
    profile.max_rel_deviation =
        std::max(profile.max_rel_deviation, std::abs(v - profile.mean_gain) /
                                                std::max(profile.mean_gain, 1e-300));
  return profile;
}

void validate_config(const StftConfig& config, bool strict) {
  if (config.fft_size <= 0 || config.fft_size % 2 != 0)
    throw Error(Errc::invalid_config, "fft_size must be a positive even integer");
  if (config.hop_size <= 0)
    throw Error(Errc::invalid_config, "hop_size must be positive");
  if (config.hop_size > config.fft_size)
    throw Error(Errc::invalid_config, "hop_size must not exceed fft_size");
  if (strict) {
    const ColaProfile profile = cola_profile(config);
    if (profile.min_gain < kDenominatorFloor)
      throw Error(Errc::invalid_config,
                  "window/hop overlap-add has dead spots; reconstruction would "
                  "be degenerate");
  }
}

Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config,
                 bool strict_cola) {
  validate_config(config, strict_cola);
  if (buffer.samples.empty()) throw Error(Errc::empty_signal, "empty signal");

  const int N = config.fft_size;
  const int H = config.hop_size;
  const std::int64_t len = buffer.length();
  const std::int64_t pad = config.center_padding ? N / 2 : 0;
  const std::int64_t span = len + 2 * pad;
  const std::int64_t n_frames = frame_count(span, N, H);

  const auto window = make_window(config.window, N);
  detail::RealFft fft(N);

  Spectrogram spec;
  spec.config = config;
  spec.sample_rate = buffer.sample_rate;
  spec.original_length = len;
  spec.frames.resize(n_frames, fft.bins());

  std::vector<double> frame(static_cast<std::size_t>(N));
  std::vector<std::complex<double>> bins(static_cast<std::size_t>(fft.bins()));
  for (std::int64_t t = 0; t < n_frames; ++t) {
    const std::int64_t start = t * H - pad;
    for (int n = 0; n < N; ++n) {
      const std::int64_t q = start + n;
      double v;
      if (config.center_padding) {
        v = sample_reflected(buffer.samples, q);
      } else {
        v = (q >= 0 && q < len) ? buffer.samples[static_cast<std::size_t>(q)] : 0.0;
      }
      frame[static_cast<std::size_t>(n)] = v * window[static_cast<std::size_t>(n)];
    }
    fft.forward(frame, bins);
    for (int b = 0; b < fft.bins(); ++b) spec.frames(t, b) = bins[static_cast<std::size_t>(b)];
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec) {
  validate_config(spec.config, false);
  const int N = spec.config.fft_size;
  const int H = spec.config.hop_size;
  if (spec.n_bins() != spec.config.n_bins())
    throw Error(Errc::invalid_config, "spectrogram bin count does not match fft_size");
  if (spec.n_frames() < 1)
    throw Error(Errc::invalid_config, "spectrogram has no frames");
  if (spec.original_length < 1)
    throw Error(Errc::invalid_config, "original_length must be positive");

  const std::int64_t n_frames = spec.n_frames();
  const std::int64_t ola_len = (n_frames - 1) * H + N;
  const std::int64_t pad = spec.config.center_padding ? N / 2 : 0;

  const auto window = make_window(spec.config.window, N);
  detail::RealFft fft(N);

  std::vector<double> numerator(static_cast<std::size_t>(ola_len), 0.0);
  std::vector<double> denominator(static_cast<std::size_t>(ola_len), 0.0);
  std::vector<std::complex<double>> bins(static_cast<std::size_t>(fft.bins()));
  std::vector<double> frame(static_cast<std::size_t>(N));

  for (std::int64_t t = 0; t < n_frames; ++t) {
    for (int b = 0; b < fft.bins(); ++b) bins[static_cast<std::size_t>(b)] = spec.frames(t, b);
    fft.inverse(bins, frame);
    const std::int64_t offset = t * H;
    for (int n = 0; n < N; ++n) {
      const double wn = window[static_cast<std::size_t>(n)];
      numerator[static_cast<std::size_t>(offset + n)] += wn * frame[static_cast<std::size_t>(n)];
      denominator[static_cast<std::size_t>(offset + n)] += wn * wn;
    }
  }

  AudioBuffer out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(static_cast<std::size_t>(spec.original_length));
  // Interior = at least half a window away from both OLA-buffer ends; there
  // the denominator must be healthy. Edge samples with a dead denominator
  // (possible only without center padding) are emitted as zero.
  const std::int64_t interior_lo = N / 2;
  const std::int64_t interior_hi = ola_len - N / 2;
  for (std::int64_t i = 0; i < spec.original_length; ++i) {
    const std::int64_t p = i + pad;
    if (p >= ola_len) {
      out.samples[static_cast<std::size_t>(i)] = 0.0;
      continue;
    }
    const double den = denominator[static_cast<std::size_t>(p)];
    if (den < kDenominatorFloor) {
      if (p >= interior_lo && p < interior_hi)
        throw Error(Errc::degenerate_normalization,
                    "overlap-add denominator below 1e-10 at sample " + std::to_string(i));
      out.samples[static_cast<std::size_t>(i)] = 0.0;
    } else {
      out.samples[static_cast<std::size_t>(i)] = numerator[static_cast<std::size_t>(p)] / den;
    }
  }
  return out;
}

MagnitudePhase split(const Spectrogram& spec) {
  MagnitudePhase mp;
  mp.magnitude.resize(spec.n_frames(), spec.n_bins());
  mp.phase.resize(spec.n_frames(), spec.n_bins());
  for (Eigen::Index t = 0; t < spec.n_frames(); ++t) {
    for (Eigen::Index b = 0; b < spec.n_bins(); ++b) {
      const std::complex<double> z = spec.frames(t, b);
      const double mag = std::abs(z);
      mp.magnitude(t, b) = mag;
      mp.phase(t, b) = mag == 0.0 ? 0.0 : std::atan2(z.imag(), z.real());
    }
  }
  return mp;
}

Spectrogram recombine(const MagnitudePhase& mp, const Spectrogram& like) {
  if (mp.magnitude.rows() != mp.phase.rows() || mp.magnitude.cols() != mp.phase.cols())
    throw Error(Errc::shape_mismatch, "magnitude and phase shapes differ");
  if (mp.magnitude.rows() != like.n_frames() || mp.magnitude.cols() != like.n_bins())
    throw Error(Errc::shape_mismatch,
                "magnitude/phase shape does not match the reference spectrogram");

  Spectrogram spec;
  spec.config = like.config;
  spec.sample_rate = like.sample_rate;
  spec.original_length = like.original_length;
  spec.frames.resize(like.n_frames(), like.n_bins());
  for (Eigen::Index t = 0; t < spec.n_frames(); ++t) {
    for (Eigen::Index b = 0; b < spec.n_bins(); ++b) {
      const double mag = mp.magnitude(t, b);
      const double ph = mp.phase(t, b);
      spec.frames(t, b) = std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
  }
  return spec;
}

}  // namespace pcs
