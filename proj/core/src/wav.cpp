// core/src/wav.cpp

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

#include "pcs/wav.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace pcs {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;
constexpr double kPcmScale = 32768.0;

// All multi-byte fields in RIFF/WAVE are little-endian; serialize explicitly
// instead of assuming host order.
std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

float float_from_le(const unsigned char* p) {
  std::uint32_t bits = read_u32(p);
  float f;
  std::memcpy(&f, &bits, sizeof f);
  return f;
}

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
  std::uint16_t block_align = 0;
};

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Error(Errc::missing_file, "cannot open " + path.string());

  std::string bytes((std::istreambuf_iterator<char>(file)),
                    std::istreambuf_iterator<char>());
  if (file.bad())
    throw Error(Errc::io_error, "read failed on " + path.string());

  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0)
    throw Error(Errc::corrupt_header, path.string() + " is not a RIFF/WAVE file");

  FmtChunk fmt;
  bool have_fmt = false;
  const unsigned char* sample_bytes = nullptr;
  std::uint32_t data_size = 0;
  bool have_data = false;

  // Walk the chunk list; RIFF pads odd-sized chunks to word boundaries.
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* header = data + pos;
    std::uint32_t chunk_size = read_u32(header + 4);
    pos += 8;
    if (pos + chunk_size > size)
      throw Error(Errc::corrupt_header, "truncated chunk in " + path.string());

    if (std::memcmp(header, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        throw Error(Errc::corrupt_header, "fmt chunk too small in " + path.string());
      fmt.format = read_u16(data + pos);
      fmt.channels = read_u16(data + pos + 2);
      fmt.sample_rate = read_u32(data + pos + 4);
      fmt.block_align = read_u16(data + pos + 12);
      fmt.bits_per_sample = read_u16(data + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(header, "data", 4) == 0) {
      sample_bytes = data + pos;
      data_size = chunk_size;
      have_data = true;
    }
    pos += chunk_size + (chunk_size & 1);
  }

  if (!have_fmt || !have_data)
    throw Error(Errc::corrupt_header, "missing fmt or data chunk in " + path.string());
  if (fmt.format != kFormatPcm && fmt.format != kFormatIeeeFloat)
    throw Error(Errc::unsupported_encoding,
                "fmt code " + std::to_string(fmt.format) + " in " + path.string());
  if (fmt.channels != 1)
    throw Error(Errc::channel_count, std::to_string(fmt.channels) +
                                         " channels in " + path.string() +
                                         ", expected mono");
  if (fmt.format == kFormatPcm && fmt.bits_per_sample != 16)
    throw Error(Errc::unsupported_encoding,
                "PCM " + std::to_string(fmt.bits_per_sample) + "-bit not supported");
  if (fmt.format == kFormatIeeeFloat && fmt.bits_per_sample != 32)
    throw Error(Errc::unsupported_encoding,
                "float " + std::to_string(fmt.bits_per_sample) + "-bit not supported");
  if (fmt.sample_rate == 0)
    throw Error(Errc::corrupt_header, "zero sample rate in " + path.string());

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
  if (data_size == 0 || data_size % bytes_per_sample != 0)
    throw Error(Errc::corrupt_header, "bad data chunk size in " + path.string());

  AudioBuffer buffer;
  buffer.sample_rate = static_cast<int>(fmt.sample_rate);
  const std::size_t n = data_size / bytes_per_sample;
  buffer.samples.resize(n);

  if (fmt.format == kFormatPcm) {
    for (std::size_t i = 0; i < n; ++i) {
      auto raw = static_cast<std::int16_t>(read_u16(sample_bytes + 2 * i));
      buffer.samples[i] = static_cast<double>(raw) / kPcmScale;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      float v = float_from_le(sample_bytes + 4 * i);
      if (!std::isfinite(v))
        throw Error(Errc::corrupt_header, "non-finite sample in " + path.string());
      buffer.samples[i] = static_cast<double>(v);
    }
  }
  return buffer;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& buffer,
               WavEncoding encoding) {
  validate(buffer);

  const std::uint16_t bits = encoding == WavEncoding::pcm16 ? 16 : 32;
  const std::uint16_t block_align = bits / 8;
  const auto n = buffer.samples.size();
  const auto data_size = static_cast<std::uint32_t>(n * block_align);

  std::string out;
  out.reserve(44 + data_size);
  out.append("RIFF");
  put_u32(out, 36 + data_size);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, encoding == WavEncoding::pcm16 ? kFormatPcm : kFormatIeeeFloat);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate) * block_align);
  put_u16(out, block_align);
  put_u16(out, bits);
  out.append("data");
  put_u32(out, data_size);

  if (encoding == WavEncoding::pcm16) {
    constexpr double kMax = 32767.0 / 32768.0;
    for (double s : buffer.samples) {
      double clamped = std::clamp(s, -1.0, kMax);
      long long q = std::llround(clamped * kPcmScale);
      q = std::clamp(q, -32768LL, 32767LL);
      put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
  } else {
    for (double s : buffer.samples) {
      auto v = static_cast<float>(s);
      std::uint32_t bits32;
      std::memcpy(&bits32, &v, sizeof bits32);
      put_u32(out, bits32);
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file)
    throw Error(Errc::io_error, "write failed on " + path.string());
}

}  // namespace pcs
