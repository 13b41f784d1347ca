// core/src/fft.hpp

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

#include <complex>
#include <span>

namespace pcs::detail {

/// One-dimensional real<->half-complex transform of a fixed size, backed by
/// FFTW. Plan creation is serialized internally (FFTW planning is not
/// thread-safe); execution through distinct instances is.
///
/// forward(): time[n] -> spectrum[k], k = 0..n/2 (unnormalized DFT).
/// inverse(): spectrum -> time, scaled by 1/n so inverse(forward(x)) == x.
class RealFft {
 public:
  explicit RealFft(int size);
  ~RealFft();

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return size_; }
  int bins() const { return size_ / 2 + 1; }

  void forward(std::span<const double> time, std::span<std::complex<double>> spectrum);
  void inverse(std::span<const std::complex<double>> spectrum, std::span<double> time);

 private:
  int size_;
  void* plan_forward_;
  void* plan_inverse_;
  double* real_buf_;
  void* complex_buf_;  // fftw_complex[bins]
};

}  // namespace pcs::detail
