// core/src/fft.cpp

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

#include "fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cstring>
#include <mutex>

namespace pcs::detail {
namespace {

// FFTW planner state is global; guard plan create/destroy.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RealFft::RealFft(int size) : size_(size) {
  assert(size > 0);
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(size));
  auto* cbuf = fftw_alloc_complex(static_cast<std::size_t>(size / 2 + 1));
  complex_buf_ = cbuf;

  std::lock_guard lock(planner_mutex());
  // FFTW_ESTIMATE keeps planning deterministic and leaves the buffers intact.
  plan_forward_ = fftw_plan_dft_r2c_1d(size, real_buf_, cbuf, FFTW_ESTIMATE);
  plan_inverse_ = fftw_plan_dft_c2r_1d(size, cbuf, real_buf_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
  fftw_free(real_buf_);
  fftw_free(complex_buf_);
}

void RealFft::forward(std::span<const double> time,
                      std::span<std::complex<double>> spectrum) {
  assert(static_cast<int>(time.size()) == size_);
  assert(static_cast<int>(spectrum.size()) == bins());
  std::memcpy(real_buf_, time.data(), sizeof(double) * time.size());
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
  // fftw_complex has the same layout as std::complex<double>.
  std::memcpy(spectrum.data(), complex_buf_,
              sizeof(std::complex<double>) * spectrum.size());
}

void RealFft::inverse(std::span<const std::complex<double>> spectrum,
                      std::span<double> time) {
  assert(static_cast<int>(spectrum.size()) == bins());
  assert(static_cast<int>(time.size()) == size_);
  std::memcpy(complex_buf_, spectrum.data(),
              sizeof(std::complex<double>) * spectrum.size());
  fftw_execute(static_cast<fftw_plan>(plan_inverse_));
  const double scale = 1.0 / size_;
  for (int i = 0; i < size_; ++i) time[static_cast<std::size_t>(i)] = real_buf_[i] * scale;
}

}  // namespace pcs::detail
