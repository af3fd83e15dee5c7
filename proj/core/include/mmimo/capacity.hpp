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
#include <string>
#include <vector>

namespace mmimo {

/// Link parameters for the closed-form bounds. SNRs are linear: rho_ul and
/// rho_pilot per terminal, rho_dl total over the array.
struct SystemParams {
  std::size_t antennas = 100;
  std::size_t terminals = 10;
  double rho_ul = 1.0;
  double rho_dl = 1.0;
  double rho_pilot = 1.0;
  std::size_t pilot_length = 10;
  std::size_t coherence_length = 196;
  double bandwidth_hz = 20e6;
  double noise_figure_db = 9.0;
  double carrier_hz = 1.9e9;

  /// Throws DomainError on non-positive fields, PayloadError when the pilots
  /// overrun the coherence interval and CapacityError when K > tau.
  void validate() const;
  /// 1 - tau/T.
  double payload_fraction() const;
};

enum class ReceiverScheme { mrc, zf };

/// Per-terminal uplink SINR of the estimated-CSI bound.
/// MRC: ρ(M-1)γ_k / (1 + ρΣβ_j - ργ_k). ZF: ρ(M-K)γ_k / (1 + ρΣ(β_j - γ_j)).
std::vector<double> ul_sinr_bound(const SystemParams& params, ReceiverScheme scheme, std::span<const double> betas);

/// (1 - tau/T)·log2(1 + SINR_k). tau == T gives zeros; ZF needs K < M
/// (RankError otherwise).
std::vector<double> ul_rate_bound(const SystemParams& params, ReceiverScheme scheme, std::span<const double> betas);

/// Downlink MRT with power fractions η: ρ_dl·M·η_k·γ_k / (1 + ρ_dl·β_k·Ση).
std::vector<double> dl_mrt_sinr_bound(std::size_t antennas, double rho_dl, std::span<const double> betas,
                                      std::span<const double> gammas, std::span<const double> etas);

/// Thermal noise over the band plus the receiver noise figure, in dBm.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

/// e^x·E1(x) for x > 0.
double scaled_exp1(double x);

/// E[log2(1 + a·X)] with X ~ Exp(1).
double expected_log2_exponential(double a);

/// Exact net rate of one terminal on one antenna with the same estimated-CSI
/// receiver the bounds assume.
double single_antenna_rate(double rho, double rho_pilot, std::size_t tau, std::size_t coherence_length,
                           double beta = 1.0);

struct EeSeSystem {
  std::string name;
  std::size_t antennas = 1;
  std::size_t terminals = 1;
  ReceiverScheme scheme = ReceiverScheme::mrc;
};

struct EeSeSweepConfig {
  std::vector<EeSeSystem> systems;  ///< first entry is the normalization reference
  std::vector<double> rho_db;
  std::size_t coherence_length = 196;
  double beta = 1.0;
};

/// Single antenna/terminal reference, 100-antenna single-terminal
/// beamforming, and 100 antennas serving 40 terminals with MRC and ZF,
/// over ρ from -30 dB to 30 dB in 0.5 dB steps.
EeSeSweepConfig default_ee_se_config();

struct EeSePoint {
  double rho_db = 0.0;
  std::size_t tau = 0;      ///< rate-maximizing pilot length at this ρ
  double se = 0.0;          ///< sum spectral efficiency, bits/s/Hz
  double ee = 0.0;          ///< se / ρ
  double ee_relative = 0.0; ///< ee over the reference's peak ee
};

struct EeSeCurve {
  EeSeSystem system;
  std::vector<EeSePoint> points;
};

struct EeSeResult {
  std::vector<EeSeCurve> curves;
  std::size_t reference_peak = 0;  ///< index into curves[0].points
  double reference_se = 0.0;
  double reference_ee = 0.0;
};

/// Sweeps ρ for each system; pilots are sent at the data SNR and τ is
/// optimized over [K, T-1]. Throws DomainError on an empty grid.
EeSeResult ee_se_sweep(const EeSeSweepConfig& config);

struct ScalingPoint {
  std::size_t antennas = 0;
  double rho = 0.0;
  double rate = 0.0;
};

/// Per-terminal rate of the MRC bound with ρ = ρ_ul / M^exponent applied to
/// both pilots and data, for M = 2, 4, ..., 2^max_log2. The exponent must be
/// 0, 0.5 or 1.
std::vector<ScalingPoint> power_scaling_check(const SystemParams& params, double exponent, int max_log2 = 16);

struct PowerControl {
  std::vector<double> eta;  ///< per terminal; zero when dropped
  std::vector<std::size_t> served;
  std::vector<std::size_t> dropped;
  double common_sinr = 0.0;
};

/// Drops the floor(drop_fraction·K) weakest terminals by β (ties keep index
/// order) and equalizes the downlink MRT bound over the rest at full power:
/// η_k ∝ (1 + ρ_dl·β_k)/(ρ_dl·M·γ_k). Throws EmptyServiceError when nobody
/// is served.
PowerControl maxmin_power_control(std::span<const double> betas, std::span<const double> gammas, std::size_t antennas,
                                  double rho_dl, double drop_fraction = 0.05);

}  // namespace mmimo
