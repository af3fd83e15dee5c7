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
#include <span>
#include <vector>

#include "mmimo/linalg.hpp"
#include "mmimo/random.hpp"

namespace mmimo {

/// M×K i.i.d. Rayleigh channel with unit average entry power.
ComplexMatrix gen_iid_channel(const Seed& seed, std::size_t antennas, std::size_t terminals);

/// Rural macro path loss in dB: 127 dB at 1 km, range-decay exponent 3.52.
double path_loss_db(double distance_km);

/// One zero-mean Gaussian shadowing draw in dB.
double draw_shadow_db(const Seed& seed, double sigma_db);
/// `count` independent draws from one stream.
std::vector<double> draw_shadow_db(const Seed& seed, std::size_t count, double sigma_db);

struct AntennaHeights {
  double base_m = 30.0;
  double terminal_m = 5.0;
};

struct TerminalPosition {
  double x_km = 0.0;
  double y_km = 0.0;
  double horizontal_km = 0.0;  ///< ground range from the array
  double distance_km = 0.0;    ///< 3-D range using the antenna heights
};

/// Uniform placement over the annulus exclusion_km < r <= radius_km around
/// the array. Throws DomainError for count < 0 or a bad annulus.
std::vector<TerminalPosition> place_terminals(const Seed& seed, std::ptrdiff_t count, double radius_km,
                                              double exclusion_km, AntennaHeights heights = {});

struct AntennaGains {
  double base_db = 0.0;
  double terminal_db = 8.0;
  double total_db() const { return base_db + terminal_db; }
};

/// Slow-fading record of one terminal.
struct LargeScaleProfile {
  double distance_km = 0.0;
  double path_loss_db = 0.0;
  double shadow_db = 0.0;
  AntennaGains gains;
  /// Linear power gain 10^(-(path_loss - shadow - gains)/10).
  double beta = 0.0;
};

LargeScaleProfile make_large_scale_profile(double distance_km, double shadow_db, AntennaGains gains);

/// Profiles for every position, shadowing drawn from `seed` with `shadow_sigma_db`.
std::vector<LargeScaleProfile> build_large_scale_profile(std::span<const TerminalPosition> positions,
                                                         const Seed& seed, double shadow_sigma_db,
                                                         AntennaGains gains = {});

std::vector<double> betas_of(std::span<const LargeScaleProfile> profiles);

}  // namespace mmimo
