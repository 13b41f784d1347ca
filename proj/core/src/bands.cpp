// core/src/bands.cpp

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

#include "pcs/bands.hpp"

#include <algorithm>
#include <limits>

namespace pcs {

BandImportanceTable BandImportanceTable::default_table() {
  return BandImportanceTable{{
      {0.0, 100.0, 0.000},
      {100.0, 200.0, 0.010},
      {200.0, 300.0, 0.026},
      {300.0, 400.0, 0.041},
      {400.0, 4400.0, 0.057},
      {4400.0, 5300.0, 0.046},
      {5300.0, 6400.0, 0.034},
      {6400.0, 7700.0, 0.023},
      {7700.0, 9500.0, 0.011},
  }};
}

double BandImportanceTable::max_bif() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& row : rows) m = std::max(m, row.bif);
  return m;
}

double BandImportanceTable::min_bif() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) m = std::min(m, row.bif);
  return m;
}

void BandImportanceTable::validate() const {
  if (rows.empty())
    throw Error(Errc::invalid_range, "band table has no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!(row.f_low >= 0.0) || !(row.f_high > row.f_low))
      throw Error(Errc::invalid_range, "band " + std::to_string(i) +
                                           " has an inverted or negative range");
    if (!(row.bif >= 0.0) || !(row.bif <= 1.0))
      throw Error(Errc::invalid_range,
                  "band " + std::to_string(i) + " weight outside [0, 1]");
    if (i > 0 && rows[i - 1].f_high != row.f_low)
      throw Error(Errc::invalid_range,
                  "bands must be contiguous and non-overlapping");
  }
}

std::vector<double> rescale_bif(const BandImportanceTable& table,
                                double gamma_max, double gamma_min) {
  table.validate();
  if (!(gamma_min > 0.0) || !(gamma_max > gamma_min))
    throw Error(Errc::invalid_range, "need gamma_max > gamma_min > 0");
  const double bif_max = table.max_bif();
  const double bif_min = table.min_bif();
  if (bif_max == bif_min)
    throw Error(Errc::degenerate_table, "all band weights are equal");

  const double spread = bif_max - bif_min;
  std::vector<double> gamma;
  gamma.reserve(table.rows.size());
  // Divide first so that BIF == BIF_max lands exactly on gamma_max when
  // BIF_min is zero.
  for (const auto& row : table.rows)
    gamma.push_back((gamma_max - gamma_min) * (row.bif / spread) + gamma_min);
  return gamma;
}

GammaSchedule build_schedule(const BandImportanceTable& table,
                             const StftConfig& config, int sample_rate,
                             double gamma_max, double gamma_min) {
  validate_config(config);
  if (sample_rate <= 0)
    throw Error(Errc::invalid_range, "sample rate must be positive");
  const std::vector<double> band_gamma = rescale_bif(table, gamma_max, gamma_min);

  GammaSchedule schedule;
  schedule.fft_size = config.fft_size;
  schedule.sample_rate = sample_rate;
  schedule.kind = GammaSchedule::Kind::pcs;
  schedule.gamma_per_bin.assign(static_cast<std::size_t>(config.n_bins()), 1.0);
  for (int b = 0; b < config.n_bins(); ++b) {
    const double center = static_cast<double>(b) * sample_rate / config.fft_size;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (center >= table.rows[i].f_low && center < table.rows[i].f_high) {
        schedule.gamma_per_bin[static_cast<std::size_t>(b)] = band_gamma[i];
        break;
      }
    }
  }
  return schedule;
}

GammaSchedule fixed_schedule(double gamma, const StftConfig& config,
                             int sample_rate) {
  validate_config(config);
  if (!(gamma >= 0.0))
    throw Error(Errc::invalid_range, "gamma must be non-negative");
  GammaSchedule schedule;
  schedule.fft_size = config.fft_size;
  schedule.sample_rate = sample_rate;
  schedule.kind = GammaSchedule::Kind::fixed;
  schedule.gamma_per_bin.assign(static_cast<std::size_t>(config.n_bins()), gamma);
  return schedule;
}

}  // namespace pcs
