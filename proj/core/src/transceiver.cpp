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

#include "mmimo/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mmimo/error.hpp"
#include "mmimo/stats.hpp"

namespace mmimo {

namespace {

std::vector<double> resolve_weights(std::span<const double> weights, Eigen::Index terminals) {
  const auto k = static_cast<std::size_t>(terminals);
  if (weights.empty()) {
    return std::vector<double>(k, 1.0 / static_cast<double>(k));
  }
  if (weights.size() != k) {
    throw DimensionError("precoder: " + std::to_string(weights.size()) + " user weights for " + std::to_string(k) +
                         " terminals");
  }
  CompensatedSum total;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("precoder: user weights must be non-negative");
    total.add(w);
  }
  if (std::abs(total.value() - 1.0) > 1e-9) {
    throw DomainError("precoder: user weights must sum to 1");
  }
  return {weights.begin(), weights.end()};
}

void check_budget(double power_budget) {
  if (!(power_budget >= 0.0) || !std::isfinite(power_budget)) {
    throw DomainError("precoder: power budget must be finite and non-negative");
  }
}

// Scales each column to unit norm times sqrt(budget·weight_k).
void normalize_columns(ComplexMatrix& w, double power_budget, const std::vector<double>& weights) {
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const double norm = w.col(k).norm();
    if (!(norm > 0.0)) {
      throw DomainError("precoder: degenerate channel (zero column " + std::to_string(k) + ")");
    }
    w.col(k) *= std::sqrt(power_budget * weights[static_cast<std::size_t>(k)]) / norm;
  }
}

}  // namespace

Precoder mrt_precoder(const ComplexMatrix& channel_estimate, double power_budget, std::span<const double> user_weights) {
  require_finite(channel_estimate, "mrt_precoder");
  check_budget(power_budget);
  const auto weights = resolve_weights(user_weights, channel_estimate.cols());
  Precoder p;
  p.scheme = PrecodingScheme::mrt;
  p.power_budget = power_budget;
  p.weights = channel_estimate.conjugate();
  normalize_columns(p.weights, power_budget, weights);
  return p;
}

Precoder zf_precoder(const ComplexMatrix& channel_estimate, double power_budget, std::span<const double> user_weights) {
  check_budget(power_budget);
  if (channel_estimate.cols() > channel_estimate.rows()) {
    throw RankError("zf_precoder: more terminals than antennas");
  }
  const auto weights = resolve_weights(user_weights, channel_estimate.cols());
  Precoder p;
  p.scheme = PrecodingScheme::zf;
  p.power_budget = power_budget;
  // Hᵀ·(H⁺)ᵀ = (H⁺H)ᵀ = I.
  p.weights = pseudo_inverse(channel_estimate).transpose();
  normalize_columns(p.weights, power_budget, weights);
  return p;
}

Precoder make_precoder(PrecodingScheme scheme, const ComplexMatrix& channel_estimate, double power_budget,
                       std::span<const double> user_weights) {
  return scheme == PrecodingScheme::mrt ? mrt_precoder(channel_estimate, power_budget, user_weights)
                                        : zf_precoder(channel_estimate, power_budget, user_weights);
}

ComplexMatrix mrc_combine(const ComplexMatrix& channel_estimate, const ComplexMatrix& received) {
  if (received.rows() != channel_estimate.rows()) {
    throw DimensionError("mrc_combine: received signal has " + std::to_string(received.rows()) + " rows, expected " +
                         std::to_string(channel_estimate.rows()));
  }
  return channel_estimate.adjoint() * received;
}

double LinkReport::sum_rate() const {
  CompensatedSum acc;
  for (const auto& t : terminals) acc.add(t.rate_bits_per_s_per_hz);
  return acc.value();
}

double LinkReport::min_sinr() const {
  double out = std::numeric_limits<double>::infinity();
  for (const auto& t : terminals) out = std::min(out, t.sinr);
  return out;
}

LinkMetrics make_link_metrics(double signal, double interference, double noise) {
  LinkMetrics m;
  m.signal_power = signal;
  m.interference_power = interference;
  m.noise_power = noise;
  const double denom = interference + noise;
  m.sinr = denom > 0.0 ? signal / denom : (signal > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  m.rate_bits_per_s_per_hz = std::log2(1.0 + m.sinr);
  return m;
}

LinkReport evaluate_downlink(const ComplexMatrix& true_channel, const Precoder& precoder, double noise_power) {
  if (!(noise_power >= 0.0)) throw DomainError("evaluate_downlink: negative noise power");
  if (true_channel.rows() != precoder.weights.rows() || true_channel.cols() != precoder.weights.cols()) {
    throw DimensionError("evaluate_downlink: channel and precoder shapes differ");
  }
  const ComplexMatrix effective = true_channel.transpose() * precoder.weights;
  LinkReport report;
  report.terminals.reserve(static_cast<std::size_t>(effective.rows()));
  for (Eigen::Index k = 0; k < effective.rows(); ++k) {
    CompensatedSum interference;
    for (Eigen::Index j = 0; j < effective.cols(); ++j) {
      if (j != k) interference.add(std::norm(effective(k, j)));
    }
    report.terminals.push_back(make_link_metrics(std::norm(effective(k, k)), interference.value(), noise_power));
  }
  return report;
}

LinkReport evaluate_uplink_mrc(const ComplexMatrix& true_channel, const ComplexMatrix& channel_estimate,
                               std::span<const double> tx_powers, double noise_power) {
  if (!(noise_power >= 0.0)) throw DomainError("evaluate_uplink_mrc: negative noise power");
  if (true_channel.rows() != channel_estimate.rows() || true_channel.cols() != channel_estimate.cols()) {
    throw DimensionError("evaluate_uplink_mrc: channel and estimate shapes differ");
  }
  if (tx_powers.size() != static_cast<std::size_t>(true_channel.cols())) {
    throw DimensionError("evaluate_uplink_mrc: one transmit power per terminal required");
  }
  const ComplexMatrix cross = channel_estimate.adjoint() * true_channel;
  LinkReport report;
  for (Eigen::Index k = 0; k < cross.rows(); ++k) {
    CompensatedSum interference;
    for (Eigen::Index j = 0; j < cross.cols(); ++j) {
      if (j != k) interference.add(tx_powers[static_cast<std::size_t>(j)] * std::norm(cross(k, j)));
    }
    const double signal = tx_powers[static_cast<std::size_t>(k)] * std::norm(cross(k, k));
    report.terminals.push_back(
        make_link_metrics(signal, interference.value(), noise_power * channel_estimate.col(k).squaredNorm()));
  }
  return report;
}

double power_for_reference_snr(const ComplexMatrix& channel, double noise_power, double target_snr) {
  if (!(noise_power > 0.0) || !(target_snr > 0.0)) {
    throw DomainError("power_for_reference_snr: noise and target SNR must be positive");
  }
  const auto k = static_cast<double>(channel.cols());
  const double mean_gain = channel.colwise().squaredNorm().mean();
  if (!(mean_gain > 0.0)) throw DomainError("power_for_reference_snr: zero channel");
  // Each terminal gets P/K, so its interference-free SNR is (P/K)·‖h_k‖²/σ².
  return target_snr * k * noise_power / mean_gain;
}

}  // namespace mmimo
