// core/include/pcs/wav.hpp

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

#include "pcs/audio.hpp"

namespace pcs {

enum class WavEncoding { pcm16, float32 };

/// Reads a mono RIFF/WAVE file. Accepts PCM 16-bit (fmt code 1) and IEEE
/// 32-bit float (fmt code 3); integer samples are scaled by 1/32768. Chunks
/// other than fmt/data are skipped.
///
/// Throws MissingFile, CorruptHeader, UnsupportedEncoding, ChannelCountError.
AudioBuffer read_wav(const std::filesystem::path& path);

/// Writes a mono little-endian RIFF/WAVE file containing only fmt and data
/// chunks. pcm16 quantizes with round-half-away-from-zero after clamping to
/// [-1, 32767/32768]; float32 stores the nearest IEEE single.
///
/// Throws InvalidBuffer (empty/NaN/Inf), IoError.
void write_wav(const std::filesystem::path& path, const AudioBuffer& buffer,
               WavEncoding encoding);

}  // namespace pcs
