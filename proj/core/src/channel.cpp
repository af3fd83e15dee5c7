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

#include "mmimo/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mmimo/error.hpp"

namespace mmimo {

ComplexMatrix gen_iid_channel(const Seed& seed, std::size_t antennas, std::size_t terminals) {
  return draw_complex_gaussian(seed, antennas, terminals);
}

double path_loss_db(double distance_km) {
  if (!(distance_km > 0.0) || !std::isfinite(distance_km)) {
    throw DomainError("path_loss_db: distance must be positive, got " + std::to_string(distance_km));
  }
  return 127.0 + 35.2 * std::log10(distance_km);
}

double draw_shadow_db(const Seed& seed, double sigma_db) {
  if (!(sigma_db >= 0.0)) {
    throw DomainError("draw_shadow_db: negative standard deviation");
  }
  if (sigma_db == 0.0) return 0.0;
  RandomStream stream(seed);
  return sigma_db * stream.normal();
}

std::vector<double> draw_shadow_db(const Seed& seed, std::size_t count, double sigma_db) {
  if (!(sigma_db >= 0.0)) {
    throw DomainError("draw_shadow_db: negative standard deviation");
  }
  std::vector<double> out(count, 0.0);
  if (sigma_db == 0.0) return out;
  RandomStream stream(seed);
  for (double& v : out) v = sigma_db * stream.normal();
  return out;
}

std::vector<TerminalPosition> place_terminals(const Seed& seed, std::ptrdiff_t count, double radius_km,
                                              double exclusion_km, AntennaHeights heights) {
  if (count < 0) {
    throw DomainError("place_terminals: negative terminal count");
  }
  if (!(exclusion_km >= 0.0) || !(exclusion_km < radius_km)) {
    throw DomainError("place_terminals: need 0 <= exclusion < radius");
  }
  const double dz_km = (heights.base_m - heights.terminal_m) / 1000.0;
  const double r0 = exclusion_km * exclusion_km;
  const double r1 = radius_km * radius_km;

  RandomStream stream(seed);
  std::vector<TerminalPosition> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    // Inverse CDF of the radial law P(R <= r) ∝ r² - r0².
    const double r = std::sqrt(r0 + stream.uniform() * (r1 - r0));
    const double theta = 2.0 * std::numbers::pi * stream.uniform();
    TerminalPosition p;
    p.x_km = r * std::cos(theta);
    p.y_km = r * std::sin(theta);
    p.horizontal_km = r;
    p.distance_km = std::hypot(r, dz_km);
    out.push_back(p);
  }
  return out;
}

LargeScaleProfile make_large_scale_profile(double distance_km, double shadow_db, AntennaGains gains) {
  LargeScaleProfile p;
  p.distance_km = distance_km;
  p.path_loss_db = path_loss_db(distance_km);
  p.shadow_db = shadow_db;
  p.gains = gains;
  p.beta = std::pow(10.0, -(p.path_loss_db - shadow_db - gains.total_db()) / 10.0);
  return p;
}

std::vector<LargeScaleProfile> build_large_scale_profile(std::span<const TerminalPosition> positions,
                                                         const Seed& seed, double shadow_sigma_db,
                                                         AntennaGains gains) {
  if (positions.empty()) {
    throw DomainError("build_large_scale_profile: no terminal positions");
  }
  const auto shadows = draw_shadow_db(seed, positions.size(), shadow_sigma_db);
  std::vector<LargeScaleProfile> out;
  out.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out.push_back(make_large_scale_profile(positions[k].distance_km, shadows[k], gains));
  }
  return out;
}

std::vector<double> betas_of(std::span<const LargeScaleProfile> profiles) {
  std::vector<double> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) out.push_back(p.beta);
  return out;
}

}  // namespace mmimo
