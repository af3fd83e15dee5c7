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

#include "mmimo/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "mmimo/error.hpp"
#include "mmimo/pilots.hpp"
#include "mmimo/stats.hpp"

namespace mmimo {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string("system parameters: ") + what + " must be positive and finite");
  }
}

void require_betas(std::span<const double> betas, std::size_t expected) {
  if (betas.size() != expected) {
    throw DimensionError("expected " + std::to_string(expected) + " large-scale gains, got " +
                         std::to_string(betas.size()));
  }
  for (double b : betas) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("large-scale gains must be positive and finite");
  }
}

// Sum rate of one system at one SNR with pilot length tau.
double system_sum_rate(const EeSeSystem& system, double rho, std::size_t tau, std::size_t coherence, double beta) {
  if (system.antennas == 1) return single_antenna_rate(rho, rho, tau, coherence, beta);
  SystemParams params;
  params.antennas = system.antennas;
  params.terminals = system.terminals;
  params.rho_ul = rho;
  params.rho_pilot = rho;
  params.pilot_length = tau;
  params.coherence_length = coherence;
  const std::vector<double> betas(system.terminals, beta);
  const auto rates = ul_rate_bound(params, system.scheme, betas);
  return sum(rates);
}

}  // namespace

void SystemParams::validate() const {
  if (antennas == 0) throw DomainError("system parameters: antennas must be positive");
  if (terminals == 0) throw DomainError("system parameters: terminals must be positive");
  if (pilot_length == 0) throw DomainError("system parameters: pilot length must be positive");
  if (coherence_length == 0) throw DomainError("system parameters: coherence length must be positive");
  if (pilot_length > coherence_length) {
    throw PayloadError("pilot length " + std::to_string(pilot_length) + " exceeds coherence interval " +
                       std::to_string(coherence_length) + ": no payload symbols left");
  }
  if (terminals > pilot_length) {
    throw CapacityError(std::to_string(terminals) + " terminals need at least as many pilot symbols, got " +
                        std::to_string(pilot_length));
  }
  require_positive(rho_ul, "rho_ul");
  require_positive(rho_dl, "rho_dl");
  require_positive(rho_pilot, "rho_pilot");
  require_positive(bandwidth_hz, "bandwidth_hz");
  require_positive(carrier_hz, "carrier_hz");
  if (!std::isfinite(noise_figure_db)) throw DomainError("system parameters: noise figure must be finite");
}

double SystemParams::payload_fraction() const {
  return 1.0 - static_cast<double>(pilot_length) / static_cast<double>(coherence_length);
}

std::vector<double> ul_sinr_bound(const SystemParams& params, ReceiverScheme scheme, std::span<const double> betas) {
  params.validate();
  require_betas(betas, params.terminals);
  const double m = static_cast<double>(params.antennas);
  const double k = static_cast<double>(params.terminals);
  if (scheme == ReceiverScheme::zf && params.terminals >= params.antennas) {
    throw RankError("zero-forcing bound needs K < M (K=" + std::to_string(params.terminals) +
                    ", M=" + std::to_string(params.antennas) + ")");
  }
  const double energy = params.rho_pilot * static_cast<double>(params.pilot_length);
  std::vector<double> gammas;
  gammas.reserve(betas.size());
  for (double b : betas) gammas.push_back(estimate_quality(energy, b));

  const double rho = params.rho_ul;
  CompensatedSum beta_sum, error_sum;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    beta_sum.add(betas[i]);
    error_sum.add(betas[i] - gammas[i]);
  }
  std::vector<double> out;
  out.reserve(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (scheme == ReceiverScheme::mrc) {
      out.push_back(rho * (m - 1.0) * gammas[i] / (1.0 + rho * beta_sum.value() - rho * gammas[i]));
    } else {
      out.push_back(rho * (m - k) * gammas[i] / (1.0 + rho * error_sum.value()));
    }
  }
  return out;
}

std::vector<double> ul_rate_bound(const SystemParams& params, ReceiverScheme scheme, std::span<const double> betas) {
  const auto sinr = ul_sinr_bound(params, scheme, betas);
  const double prefactor = params.payload_fraction();
  std::vector<double> out;
  out.reserve(sinr.size());
  for (double s : sinr) out.push_back(prefactor * std::log2(1.0 + s));
  return out;
}

std::vector<double> dl_mrt_sinr_bound(std::size_t antennas, double rho_dl, std::span<const double> betas,
                                      std::span<const double> gammas, std::span<const double> etas) {
  if (antennas == 0) throw DomainError("dl_mrt_sinr_bound: antennas must be positive");
  require_positive(rho_dl, "rho_dl");
  if (gammas.size() != betas.size() || etas.size() != betas.size()) {
    throw DimensionError("dl_mrt_sinr_bound: beta, gamma and eta lists differ in length");
  }
  CompensatedSum eta_sum;
  for (double e : etas) {
    if (!(e >= 0.0)) throw DomainError("dl_mrt_sinr_bound: negative power fraction");
    eta_sum.add(e);
  }
  const double m = static_cast<double>(antennas);
  std::vector<double> out;
  out.reserve(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) {
    out.push_back(rho_dl * m * etas[k] * gammas[k] / (1.0 + rho_dl * betas[k] * eta_sum.value()));
  }
  return out;
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
  require_positive(bandwidth_hz, "bandwidth_hz");
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double scaled_exp1(double x) {
  if (!(x > 0.0)) throw DomainError("scaled_exp1: argument must be positive");
  if (std::isinf(x)) return 0.0;
  if (x < 1.0) {
    // E1(x) = -γ - ln x - Σ_{n≥1} (-x)^n / (n·n!)
    double term = 1.0;
    double series = 0.0;
    for (int n = 1; n < 200; ++n) {
      term *= -x / n;
      const double add = term / n;
      series += add;
      if (std::abs(add) < 1e-17 * std::abs(series)) break;
    }
    return std::exp(x) * (-kEulerGamma - std::log(x) - series);
  }
  // Continued fraction 1/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz.
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

double expected_log2_exponential(double a) {
  if (!(a >= 0.0)) throw DomainError("expected_log2_exponential: scale must be non-negative");
  if (a == 0.0) return 0.0;
  return scaled_exp1(1.0 / a) / std::numbers::ln2;
}

double single_antenna_rate(double rho, double rho_pilot, std::size_t tau, std::size_t coherence_length, double beta) {
  SystemParams params;
  params.antennas = 1;
  params.terminals = 1;
  params.rho_ul = rho;
  params.rho_pilot = rho_pilot;
  params.pilot_length = tau;
  params.coherence_length = coherence_length;
  params.validate();
  require_positive(beta, "beta");
  const double gamma = estimate_quality(rho_pilot * static_cast<double>(tau), beta);
  const double a = rho * gamma / (1.0 + rho * (beta - gamma));
  return params.payload_fraction() * expected_log2_exponential(a);
}

EeSeSweepConfig default_ee_se_config() {
  EeSeSweepConfig config;
  config.systems = {
      {"reference", 1, 1, ReceiverScheme::mrc},
      {"single-user-bf", 100, 1, ReceiverScheme::mrc},
      {"massive-mrc", 100, 40, ReceiverScheme::mrc},
      {"massive-zf", 100, 40, ReceiverScheme::zf},
  };
  for (int i = -60; i <= 60; ++i) config.rho_db.push_back(0.5 * i);
  return config;
}

EeSeResult ee_se_sweep(const EeSeSweepConfig& config) {
  if (config.rho_db.empty()) throw DomainError("ee_se_sweep: empty SNR grid");
  if (config.systems.empty()) throw DomainError("ee_se_sweep: no systems");
  for (const auto& system : config.systems) {
    if (system.antennas == 0 || system.terminals == 0) throw DomainError("ee_se_sweep: empty system " + system.name);
    if (system.antennas == 1 && system.terminals != 1) {
      throw DomainError("ee_se_sweep: a single antenna serves a single terminal (" + system.name + ")");
    }
    if (system.terminals >= config.coherence_length) {
      throw CapacityError("ee_se_sweep: " + system.name + " has no room for payload after pilots");
    }
  }

  EeSeResult result;
  for (const auto& system : config.systems) {
    EeSeCurve curve;
    curve.system = system;
    for (double rho_db : config.rho_db) {
      const double rho = db_to_linear(rho_db);
      EeSePoint point;
      point.rho_db = rho_db;
      point.se = -1.0;
      for (std::size_t tau = system.terminals; tau < config.coherence_length; ++tau) {
        const double se = system_sum_rate(system, rho, tau, config.coherence_length, config.beta);
        if (se > point.se) {
          point.se = se;
          point.tau = tau;
        }
      }
      point.ee = point.se / rho;
      curve.points.push_back(point);
    }
    result.curves.push_back(std::move(curve));
  }

  const auto& reference = result.curves.front().points;
  for (std::size_t i = 1; i < reference.size(); ++i) {
    if (reference[i].ee > reference[result.reference_peak].ee) result.reference_peak = i;
  }
  result.reference_se = reference[result.reference_peak].se;
  result.reference_ee = reference[result.reference_peak].ee;
  for (auto& curve : result.curves) {
    for (auto& point : curve.points) point.ee_relative = point.ee / result.reference_ee;
  }
  return result;
}

std::vector<ScalingPoint> power_scaling_check(const SystemParams& params, double exponent, int max_log2) {
  if (exponent != 0.0 && exponent != 0.5 && exponent != 1.0) {
    throw DomainError("power_scaling_check: exponent must be 0, 0.5 or 1");
  }
  if (max_log2 < 1 || max_log2 > 30) throw DomainError("power_scaling_check: ladder must span 2^1 to 2^30");
  params.validate();
  const std::vector<double> betas(params.terminals, 1.0);
  std::vector<ScalingPoint> out;
  for (int e = 1; e <= max_log2; ++e) {
    SystemParams p = params;
    p.antennas = std::size_t{1} << e;
    p.rho_ul = params.rho_ul / std::pow(static_cast<double>(p.antennas), exponent);
    p.rho_pilot = p.rho_ul;
    const auto rates = ul_rate_bound(p, ReceiverScheme::mrc, betas);
    out.push_back({p.antennas, p.rho_ul, rates.front()});
  }
  return out;
}

PowerControl maxmin_power_control(std::span<const double> betas, std::span<const double> gammas, std::size_t antennas,
                                  double rho_dl, double drop_fraction) {
  if (gammas.size() != betas.size()) throw DimensionError("maxmin_power_control: beta and gamma lengths differ");
  if (antennas == 0) throw DomainError("maxmin_power_control: antennas must be positive");
  require_positive(rho_dl, "rho_dl");
  if (!(drop_fraction >= 0.0) || drop_fraction > 1.0) {
    throw DomainError("maxmin_power_control: drop fraction must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < betas.size(); ++k) {
    if (!(betas[k] > 0.0) || !(gammas[k] > 0.0)) {
      throw DomainError("maxmin_power_control: beta and gamma must be positive (terminal " + std::to_string(k) + ")");
    }
  }

  const std::size_t count = betas.size();
  const auto n_drop =
      static_cast<std::size_t>(std::floor(drop_fraction * static_cast<double>(count) + 1e-9));
  if (n_drop >= count) throw EmptyServiceError("maxmin_power_control: every terminal would be dropped");

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return betas[a] < betas[b]; });

  PowerControl out;
  out.dropped.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_drop));
  out.served.assign(order.begin() + static_cast<std::ptrdiff_t>(n_drop), order.end());
  std::sort(out.dropped.begin(), out.dropped.end());
  std::sort(out.served.begin(), out.served.end());

  const double m = static_cast<double>(antennas);
  out.eta.assign(count, 0.0);
  CompensatedSum total;
  for (std::size_t k : out.served) {
    out.eta[k] = (1.0 + rho_dl * betas[k]) / (rho_dl * m * gammas[k]);
    total.add(out.eta[k]);
  }
  for (std::size_t k : out.served) out.eta[k] /= total.value();
  out.common_sinr = 1.0 / total.value();
  return out;
}

}  // namespace mmimo
