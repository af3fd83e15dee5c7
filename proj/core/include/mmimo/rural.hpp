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

#include "mmimo/channel.hpp"
#include "mmimo/random.hpp"

namespace mmimo {

/// Single-cell rural downlink with slow fading only.
struct RuralScenario {
  std::size_t antennas = 6400;
  std::size_t terminals = 1000;
  double total_power_w = 120.0;
  double bandwidth_hz = 20e6;
  double carrier_hz = 1.9e9;
  double radius_km = 6.0;
  double exclusion_km = 0.035;
  AntennaHeights heights;
  double noise_figure_db = 9.0;
  double terminal_gain_db = 8.0;
  double base_gain_db = 0.0;
  double shadow_sigma_db = 8.0;
  double pilot_fraction = 0.25;
  double drop_fraction = 0.05;
  /// Uplink pilot budget: terminal pilot power over a coherence block of
  /// coherence_time_s × coherence_bandwidth_hz symbols.
  double pilot_power_w = 0.2;
  double coherence_time_s = 0.164;
  double coherence_bandwidth_hz = 200e3;

  double noise_dbm() const;
  /// Total downlink SNR ρ_dl (linear).
  double rho_dl() const;
  /// Per-symbol pilot SNR ρ_p (linear).
  double rho_pilot() const;
  std::size_t coherence_symbols() const;
  std::size_t pilot_length() const;

  /// Throws ConfigError on any departure from the pinned deployment unless
  /// allow_override is set; always rejects physically invalid values.
  void validate(bool allow_override = false) const;
};

struct RuralDrop {
  std::size_t served = 0;
  double common_sinr = 0.0;
  double throughput_mbps = 0.0;
  double throughput_mbps_perfect_csi = 0.0;
  double sum_throughput_gbps = 0.0;
};

struct RuralResult {
  std::vector<RuralDrop> drops;
  /// Throughput every served terminal gets, averaged over drops.
  double mean_throughput_mbps = 0.0;
  double p5_throughput_mbps = 0.0;
  double mean_throughput_mbps_perfect_csi = 0.0;
  double mean_sum_throughput_gbps = 0.0;
  double sum_spectral_efficiency = 0.0;
};

/// Monte Carlo over terminal placements and shadowing; each drop runs
/// max-min power control and evaluates the MRT downlink bound. Drop d uses
/// seed.child(d).
RuralResult rural_broadband(const RuralScenario& scenario, const Seed& seed, std::size_t drops, unsigned threads = 1,
                            bool allow_override = false);

}  // namespace mmimo
