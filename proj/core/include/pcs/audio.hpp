// core/include/pcs/audio.hpp

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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pcs/error.hpp"

namespace pcs {

/// Mono waveform in the nominal range [-1, 1]; the entry/exit type of every
/// processing chain in this library.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;  // Hz

  std::int64_t length() const { return static_cast<std::int64_t>(samples.size()); }
};

inline bool all_finite(const AudioBuffer& buffer) {
  for (double s : buffer.samples) {
    if (!std::isfinite(s)) return false;
  }
  return true;
}

/// Throws InvalidBuffer unless the buffer is non-empty, finite, and carries a
/// positive sample rate.
inline void validate(const AudioBuffer& buffer) {
  if (buffer.samples.empty())
    throw Error(Errc::invalid_buffer, "buffer has no samples");
  if (buffer.sample_rate <= 0)
    throw Error(Errc::invalid_buffer, "sample rate must be positive");
  if (!all_finite(buffer))
    throw Error(Errc::invalid_buffer, "buffer contains NaN or Inf");
}

inline double peak(const AudioBuffer& buffer) {
  double p = 0.0;
  for (double s : buffer.samples) p = std::max(p, std::abs(s));
  return p;
}

}  // namespace pcs
