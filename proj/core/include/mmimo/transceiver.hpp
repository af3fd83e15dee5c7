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

#include <span>
#include <vector>

#include "mmimo/linalg.hpp"

namespace mmimo {

enum class PrecodingScheme { mrt, zf };

/// Downlink linear precoder. Terminal k receives h_kᵀ·W·s, so columns of W
/// are per-stream antenna weights and trace(WᴴW) equals the power budget.
struct Precoder {
  ComplexMatrix weights;
  PrecodingScheme scheme = PrecodingScheme::mrt;
  double power_budget = 0.0;

  double radiated_power() const { return weights.squaredNorm(); }
};

/// Maximum-ratio transmission: column k ∝ conj(ĥ_k), carrying
/// user_weights[k]·power_budget. Empty weights mean an equal split.
/// Throws DomainError on a zero (degenerate) column.
Precoder mrt_precoder(const ComplexMatrix& channel_estimate, double power_budget,
                      std::span<const double> user_weights = {});

/// Zero-forcing: columns of the transposed pseudo-inverse, each normalized and
/// scaled like MRT. Under perfect CSI HᵀW is diagonal. Throws RankError for
/// K > M or rank deficiency.
Precoder zf_precoder(const ComplexMatrix& channel_estimate, double power_budget,
                     std::span<const double> user_weights = {});

Precoder make_precoder(PrecodingScheme scheme, const ComplexMatrix& channel_estimate, double power_budget,
                       std::span<const double> user_weights = {});

/// Uplink maximum-ratio combining: Ĥᴴ·Y. Throws DimensionError on shape mismatch.
ComplexMatrix mrc_combine(const ComplexMatrix& channel_estimate, const ComplexMatrix& received);

struct LinkMetrics {
  double signal_power = 0.0;
  double interference_power = 0.0;
  double noise_power = 0.0;
  double sinr = 0.0;
  double rate_bits_per_s_per_hz = 0.0;
};

struct LinkReport {
  std::vector<LinkMetrics> terminals;

  double sum_rate() const;
  double min_sinr() const;
};

LinkMetrics make_link_metrics(double signal, double interference, double noise);

/// signal_k = |h_kᵀw_k|², interference_k = Σ_{j≠k}|h_kᵀw_j|².
LinkReport evaluate_downlink(const ComplexMatrix& true_channel, const Precoder& precoder, double noise_power);

/// Uplink with MRC on the estimate: terminal j transmits with power
/// tx_powers[j]; output k is ĥ_kᴴ·y.
LinkReport evaluate_uplink_mrc(const ComplexMatrix& true_channel, const ComplexMatrix& channel_estimate,
                               std::span<const double> tx_powers, double noise_power);

/// Total MRT power that gives `target_snr` as the interference-free
/// single-user SNR averaged over terminals, for an equal power split.
double power_for_reference_snr(const ComplexMatrix& channel, double noise_power, double target_snr);

}  // namespace mmimo
