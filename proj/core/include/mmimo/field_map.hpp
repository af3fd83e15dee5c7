// mmimo-sim: massive MIMO physical-layer simulation library
// Copyright (C) 2026 The mmimo-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <vector>

#include "mmimo/random.hpp"
#include "mmimo/scatterer.hpp"
#include "mmimo/transceiver.hpp"

namespace mmimo {

/// Geometry of the spatial-focusing experiment. All lengths in wavelengths.
struct FocusingSetup {
  Region region{{0.0, 0.0}, 800.0, 800.0};
  /// Array center sits this far to the left (-x) of the region center.
  double bs_distance = 1600.0;
  std::size_t antennas = 64;
  double antenna_spacing = 12.5;
  std::size_t scatterers = 400;
  /// users[0] is the target; the rest are co-scheduled terminals.
  std::vector<Point2> users{{0.0, 0.0}, {3.0, 0.0}, {-3.0, 0.0}, {0.0, 3.0}, {0.0, -3.0}};
  SpreadingLaw law = SpreadingLaw::cylindrical;
  double wavelength = 1.0;

  std::vector<Point2> antenna_positions() const;
  void validate() const;
};

/// Square evaluation grid centered on `center`.
struct GridSpec {
  Point2 center;
  double half_width = 40.0;
  double step = 1.0;

  std::size_t side() const;
  /// Row-major: y outer, x inner.
  std::vector<Point2> points() const;
};

struct FieldMap {
  std::vector<Point2> points;
  /// Trial-averaged |Σ_m w_{m,target}·g_m(p)|² per grid point.
  std::vector<double> average_power;
  /// Same quantity at each user's exact position (index 0 = target).
  std::vector<double> user_power;
  double spatial_mean = 0.0;
  std::size_t trials = 0;

  /// Grid power in dB relative to the spatial mean.
  std::vector<double> relative_db() const;
  /// User-position power in dB relative to the spatial mean.
  double user_relative_db(std::size_t user) const;
};

/// Averages the target stream's field over `trials` independent scatterer
/// draws. Trial t uses seed.child(t); results are independent of `threads`.
FieldMap field_map(const FocusingSetup& setup, PrecodingScheme scheme, const GridSpec& grid, std::size_t trials,
                   const Seed& seed, unsigned threads = 1);

}  // namespace mmimo
