// core/include/pcs/error.hpp

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

#include <stdexcept>
#include <string>

namespace pcs {

enum class Errc {
  missing_file,
  corrupt_header,
  unsupported_encoding,
  channel_count,
  io_error,
  invalid_buffer,
  invalid_config,
  empty_signal,
  degenerate_normalization,
  shape_mismatch,
  negative_magnitude,
  degenerate_table,
  invalid_range,
  length_mismatch,
  signal_too_short,
  all_frames_silent,
  missing_reference,
  pair_mismatch,
};

const char* errc_name(Errc code) noexcept;

/// Library-wide exception; carries a machine-checkable code next to the
/// human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::missing_file: return "MissingFile";
    case Errc::corrupt_header: return "CorruptHeader";
    case Errc::unsupported_encoding: return "UnsupportedEncoding";
    case Errc::channel_count: return "ChannelCountError";
    case Errc::io_error: return "IoError";
    case Errc::invalid_buffer: return "InvalidBuffer";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::empty_signal: return "EmptySignal";
    case Errc::degenerate_normalization: return "DegenerateNormalization";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::negative_magnitude: return "NegativeMagnitude";
    case Errc::degenerate_table: return "DegenerateTable";
    case Errc::invalid_range: return "InvalidRange";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::signal_too_short: return "SignalTooShort";
    case Errc::all_frames_silent: return "AllFramesSilent";
    case Errc::missing_reference: return "MissingReference";
    case Errc::pair_mismatch: return "PairMismatch";
  }
  return "UnknownError";
}

}  // namespace pcs
