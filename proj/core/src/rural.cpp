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

#include "mmimo/rural.hpp"

#include <cmath>
#include <string>

#include "mmimo/capacity.hpp"
#include "mmimo/error.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/pilots.hpp"
#include "mmimo/stats.hpp"

namespace mmimo {

namespace {

bool same(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

void pin(bool ok, bool allow_override, const std::string& what) {
  if (!ok && !allow_override) {
    throw ConfigError("rural scenario: " + what + " differs from the pinned deployment (set the override flag for "
                      "sensitivity studies)");
  }
}

void positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string("rural scenario: ") + what + " must be positive and finite");
  }
}

double throughput_mbps(const RuralScenario& s, double sinr) {
  return (1.0 - s.pilot_fraction) * s.bandwidth_hz * std::log2(1.0 + sinr) / 1e6;
}

}  // namespace

double RuralScenario::noise_dbm() const { return noise_power_dbm(bandwidth_hz, noise_figure_db); }

double RuralScenario::rho_dl() const { return db_to_linear(10.0 * std::log10(total_power_w * 1e3) - noise_dbm()); }

double RuralScenario::rho_pilot() const {
  return db_to_linear(10.0 * std::log10(pilot_power_w * 1e3) - noise_dbm());
}

std::size_t RuralScenario::coherence_symbols() const {
  return static_cast<std::size_t>(std::llround(coherence_time_s * coherence_bandwidth_hz));
}

std::size_t RuralScenario::pilot_length() const {
  return static_cast<std::size_t>(std::llround(pilot_fraction * static_cast<double>(coherence_symbols())));
}

void RuralScenario::validate(bool allow_override) const {
  if (antennas == 0 || terminals == 0) throw ConfigError("rural scenario: antennas and terminals must be positive");
  positive(total_power_w, "total_power_w");
  positive(bandwidth_hz, "bandwidth_hz");
  positive(carrier_hz, "carrier_hz");
  positive(radius_km, "radius_km");
  positive(pilot_power_w, "pilot_power_w");
  positive(coherence_time_s, "coherence_time_s");
  positive(coherence_bandwidth_hz, "coherence_bandwidth_hz");
  if (!(exclusion_km >= 0.0) || !(exclusion_km < radius_km)) {
    throw ConfigError("rural scenario: need 0 <= exclusion_km < radius_km");
  }
  if (!(pilot_fraction > 0.0) || !(pilot_fraction < 1.0)) {
    throw ConfigError("rural scenario: pilot_fraction must lie in (0, 1)");
  }
  if (!(drop_fraction >= 0.0) || !(drop_fraction < 1.0)) {
    throw ConfigError("rural scenario: drop_fraction must lie in [0, 1)");
  }
  if (!(shadow_sigma_db >= 0.0)) throw ConfigError("rural scenario: shadow_sigma_db must be non-negative");
  if (pilot_length() == 0 || pilot_length() < terminals) {
    throw ConfigError("rural scenario: coherence block leaves " + std::to_string(pilot_length()) +
                      " pilot symbols for " + std::to_string(terminals) + " terminals");
  }

  const RuralScenario pinned;
  pin(antennas == pinned.antennas, allow_override, "antennas");
  pin(terminals == pinned.terminals, allow_override, "terminals");
  pin(same(total_power_w, pinned.total_power_w), allow_override, "total_power_w");
  pin(same(bandwidth_hz, pinned.bandwidth_hz), allow_override, "bandwidth_hz");
  pin(same(carrier_hz, pinned.carrier_hz), allow_override, "carrier_hz");
  pin(same(radius_km, pinned.radius_km), allow_override, "radius_km");
  pin(same(noise_figure_db, pinned.noise_figure_db), allow_override, "noise_figure_db");
  pin(same(terminal_gain_db, pinned.terminal_gain_db), allow_override, "terminal_gain_db");
  pin(same(shadow_sigma_db, pinned.shadow_sigma_db), allow_override, "shadow_sigma_db");
  pin(same(pilot_fraction, pinned.pilot_fraction), allow_override, "pilot_fraction");
  pin(same(drop_fraction, pinned.drop_fraction), allow_override, "drop_fraction");
}

RuralResult rural_broadband(const RuralScenario& scenario, const Seed& seed, std::size_t drops, unsigned threads,
                            bool allow_override) {
  scenario.validate(allow_override);
  if (drops == 0) throw DomainError("rural_broadband: at least one drop required");

  const double rho_dl = scenario.rho_dl();
  const double pilot_energy = scenario.rho_pilot() * static_cast<double>(scenario.pilot_length());
  const AntennaGains gains{scenario.base_gain_db, scenario.terminal_gain_db};

  auto run_drop = [&](std::size_t d) {
    const Seed drop_seed = seed.child(d);
    const auto positions = place_terminals(drop_seed.child(0), static_cast<std::ptrdiff_t>(scenario.terminals),
                                           scenario.radius_km, scenario.exclusion_km, scenario.heights);
    const auto profiles = build_large_scale_profile(positions, drop_seed.child(1), scenario.shadow_sigma_db, gains);
    const auto betas = betas_of(profiles);
    std::vector<double> gammas;
    gammas.reserve(betas.size());
    for (double b : betas) gammas.push_back(estimate_quality(pilot_energy, b));

    const PowerControl pc =
        maxmin_power_control(betas, gammas, scenario.antennas, rho_dl, scenario.drop_fraction);
    const PowerControl ideal =
        maxmin_power_control(betas, betas, scenario.antennas, rho_dl, scenario.drop_fraction);

    RuralDrop out;
    out.served = pc.served.size();
    out.common_sinr = pc.common_sinr;
    out.throughput_mbps = throughput_mbps(scenario, pc.common_sinr);
    out.throughput_mbps_perfect_csi = throughput_mbps(scenario, ideal.common_sinr);
    out.sum_throughput_gbps = out.throughput_mbps * static_cast<double>(out.served) / 1e3;
    return out;
  };

  RuralResult result;
  result.drops = parallel_map(drops, threads, run_drop);

  std::vector<double> rates, ideal, sums;
  for (const auto& d : result.drops) {
    rates.push_back(d.throughput_mbps);
    ideal.push_back(d.throughput_mbps_perfect_csi);
    sums.push_back(d.sum_throughput_gbps);
  }
  result.mean_throughput_mbps = mean(rates);
  result.p5_throughput_mbps = EmpiricalCdf(rates, "Mb/s").quantile(0.05);
  result.mean_throughput_mbps_perfect_csi = mean(ideal);
  result.mean_sum_throughput_gbps = mean(sums);
  result.sum_spectral_efficiency = result.mean_sum_throughput_gbps * 1e9 / scenario.bandwidth_hz;
  return result;
}

}  // namespace mmimo
