// core/src/feature_file.cpp

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

#include "pcs/feature_file.hpp"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "pcs/error.hpp"

namespace pcs {
namespace {

constexpr char kMagic[4] = {'P', 'C', 'S', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f32(std::string& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  put_u32(out, bits);
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t take_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

double take_f64(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

float take_f32(const unsigned char* p) {
  std::uint32_t bits = take_u32(p);
  float v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

constexpr std::size_t kHeaderSize = 4 + 4 + 4 + 4 + 8 + 4 + 4;

}  // namespace

void write_pcsf(const std::filesystem::path& path, const Eigen::ArrayXXd& values,
                double sample_rate, std::uint32_t fft_size, std::uint32_t hop_size) {
  const auto n_frames = static_cast<std::uint32_t>(values.rows());
  const auto n_bins = static_cast<std::uint32_t>(values.cols());

  std::string out;
  out.reserve(kHeaderSize + static_cast<std::size_t>(n_frames) * n_bins * 4);
  out.append(kMagic, 4);
  put_u32(out, kVersion);
  put_u32(out, n_frames);
  put_u32(out, n_bins);
  put_f64(out, sample_rate);
  put_u32(out, fft_size);
  put_u32(out, hop_size);
  for (std::uint32_t t = 0; t < n_frames; ++t)
    for (std::uint32_t b = 0; b < n_bins; ++b)
      put_f32(out, static_cast<float>(values(t, b)));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file)
    throw Error(Errc::io_error, "write failed on " + path.string());
}

FeatureFile read_pcsf(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Error(Errc::missing_file, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(file)),
                    std::istreambuf_iterator<char>());
  if (file.bad())
    throw Error(Errc::io_error, "read failed on " + path.string());

  if (bytes.size() < kHeaderSize)
    throw Error(Errc::corrupt_header, path.string() + " is too small for a PCSF header");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (std::memcmp(p, kMagic, 4) != 0)
    throw Error(Errc::corrupt_header, path.string() + " lacks PCSF magic");
  if (take_u32(p + 4) != kVersion)
    throw Error(Errc::corrupt_header, "unsupported PCSF version in " + path.string());

  FeatureFile out;
  const std::uint32_t n_frames = take_u32(p + 8);
  const std::uint32_t n_bins = take_u32(p + 12);
  out.sample_rate = take_f64(p + 16);
  out.fft_size = take_u32(p + 24);
  out.hop_size = take_u32(p + 28);

  const std::size_t expected =
      kHeaderSize + static_cast<std::size_t>(n_frames) * n_bins * 4;
  if (bytes.size() != expected)
    throw Error(Errc::corrupt_header, "PCSF payload size mismatch in " + path.string());

  out.values.resize(n_frames, n_bins);
  const unsigned char* cursor = p + kHeaderSize;
  for (std::uint32_t t = 0; t < n_frames; ++t)
    for (std::uint32_t b = 0; b < n_bins; ++b, cursor += 4)
      out.values(t, b) = take_f32(cursor);
  return out;
}

}  // namespace pcs
