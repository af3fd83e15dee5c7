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

#include "mmimo/pilots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "mmimo/error.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/stats.hpp"

namespace mmimo {

std::size_t max_orthogonal_pilots(double coherence_s, double delay_spread_s) {
  if (!(delay_spread_s > 0.0) || !(coherence_s >= delay_spread_s) || !std::isfinite(coherence_s)) {
    throw DomainError("max_orthogonal_pilots: need 0 < delay spread <= coherence interval");
  }
  // 1 ms / 5 us is 199.99999999999997 in binary floating point.
  const double ratio = coherence_s / delay_spread_s;
  return static_cast<std::size_t>(std::floor(ratio * (1.0 + 1e-12)));
}

Complex PilotBook::correlation(std::size_t i, std::size_t k) const {
  const Complex inner = sequences.col(static_cast<Eigen::Index>(k)).dot(sequences.col(static_cast<Eigen::Index>(i)));
  return inner / static_cast<double>(tau);
}

PilotBook build_pilot_book(std::size_t tau, std::size_t count) {
  if (tau == 0) throw DomainError("build_pilot_book: pilot length must be positive");
  if (count > tau) {
    throw CapacityError("build_pilot_book: " + std::to_string(count) + " orthogonal pilots requested but only " +
                        std::to_string(tau) + " fit in length " + std::to_string(tau));
  }
  PilotBook book;
  book.tau = tau;
  book.sequences.resize(static_cast<Eigen::Index>(tau), static_cast<Eigen::Index>(count));
  for (std::size_t t = 0; t < tau; ++t) {
    for (std::size_t p = 0; p < count; ++p) {
      // Reduce the index product mod τ before forming the angle.
      const double frac = static_cast<double>((t * p) % tau) / static_cast<double>(tau);
      book.sequences(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(p)) =
          std::polar(1.0, -2.0 * std::numbers::pi * frac);
    }
  }
  return book;
}

PilotBook custom_pilot_book(ComplexMatrix sequences) {
  require_finite(sequences, "custom_pilot_book");
  if (sequences.rows() == 0 || sequences.cols() == 0) throw DimensionError("custom_pilot_book: empty book");
  PilotBook book;
  book.tau = static_cast<std::size_t>(sequences.rows());
  book.sequences = std::move(sequences);
  return book;
}

void PilotAssignment::validate(const PilotBook& book) const {
  if (pilot.size() != beta.size()) {
    throw DimensionError("pilot assignment: pilot and beta lists differ in length");
  }
  for (std::size_t i = 0; i < pilot.size(); ++i) {
    if (pilot[i] >= book.count()) {
      throw DimensionError("pilot assignment: transmitter " + std::to_string(i) + " uses pilot " +
                           std::to_string(pilot[i]) + " outside a book of " + std::to_string(book.count()));
    }
    if (!(beta[i] >= 0.0)) throw DomainError("pilot assignment: negative beta");
  }
  for (std::size_t t : targets) {
    if (t >= pilot.size()) throw DimensionError("pilot assignment: target index out of range");
  }
}

ComplexMatrix synthesize_pilot_signal(const ComplexMatrix& channels, const PilotBook& book,
                                      const PilotAssignment& assignment, double pilot_snr, const Seed& noise_seed,
                                      bool noiseless) {
  assignment.validate(book);
  if (static_cast<std::size_t>(channels.cols()) != assignment.pilot.size()) {
    throw DimensionError("synthesize_pilot_signal: one channel column per transmitter required");
  }
  if (!(pilot_snr >= 0.0)) throw DomainError("synthesize_pilot_signal: negative pilot SNR");

  ComplexMatrix phi(static_cast<Eigen::Index>(book.tau), channels.cols());
  for (Eigen::Index i = 0; i < channels.cols(); ++i) {
    phi.col(i) = book.sequences.col(static_cast<Eigen::Index>(assignment.pilot[static_cast<std::size_t>(i)]));
  }
  ComplexMatrix y = std::sqrt(pilot_snr) * channels * phi.transpose();
  if (!noiseless) {
    y += draw_complex_gaussian(noise_seed, static_cast<std::size_t>(y.rows()), book.tau);
  }
  return y;
}

double estimate_quality(double pilot_energy_snr, double beta) {
  return pilot_energy_snr * beta * beta / (1.0 + pilot_energy_snr * beta);
}

ChannelEstimate estimate_channels(const ComplexMatrix& received_pilots, const PilotBook& book,
                                  const PilotAssignment& assignment, double pilot_snr, Estimator estimator) {
  assignment.validate(book);
  if (static_cast<std::size_t>(received_pilots.cols()) != book.tau) {
    throw DimensionError("estimate_channels: received block has " + std::to_string(received_pilots.cols()) +
                         " columns, pilot length is " + std::to_string(book.tau));
  }
  if (!(pilot_snr > 0.0)) throw DomainError("estimate_channels: pilot SNR must be positive");

  const double tau = static_cast<double>(book.tau);
  const double noise_term = 1.0 / (pilot_snr * tau);

  ChannelEstimate out;
  out.estimate.resize(received_pilots.rows(), static_cast<Eigen::Index>(assignment.targets.size()));
  out.quality.reserve(assignment.targets.size());
  for (std::size_t j = 0; j < assignment.targets.size(); ++j) {
    const std::size_t k = assignment.targets[j];
    const std::size_t pk = assignment.pilot[k];
    const ComplexVector ls =
        received_pilots * book.sequences.col(static_cast<Eigen::Index>(pk)).conjugate() / (tau * std::sqrt(pilot_snr));

    CompensatedSum leak;
    for (std::size_t i = 0; i < assignment.pilot.size(); ++i) {
      leak.add(std::norm(book.correlation(assignment.pilot[i], pk)) * assignment.beta[i]);
    }
    const double denom = leak.value() + noise_term;
    const double beta_k = assignment.beta[k];
    const double coefficient = estimator == Estimator::mmse ? beta_k / denom : 1.0;
    out.estimate.col(static_cast<Eigen::Index>(j)) = coefficient * ls;
    out.quality.push_back(beta_k * beta_k / denom);
  }
  return out;
}

bool hex_adjacent(const HexCell& a, const HexCell& b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  const int ds = -(dq + dr);
  return std::max({std::abs(dq), std::abs(dr), std::abs(ds)}) == 1;
}

CellGrid make_hex_grid(std::size_t rings, int reuse_factor, double inter_site_distance) {
  if (!(inter_site_distance > 0.0)) throw DomainError("make_hex_grid: inter-site distance must be positive");
  CellGrid grid;
  grid.reuse_factor = reuse_factor;
  grid.inter_site_distance = inter_site_distance;
  const int n = static_cast<int>(rings);
  for (int q = -n; q <= n; ++q) {
    for (int r = std::max(-n, -q - n); r <= std::min(n, -q + n); ++r) {
      HexCell cell;
      cell.q = q;
      cell.r = r;
      cell.center = {inter_site_distance * (q + 0.5 * r), inter_site_distance * (std::sqrt(3.0) / 2.0) * r};
      grid.cells.push_back(cell);
    }
  }
  const auto groups = assign_pilots(grid);
  for (std::size_t i = 0; i < groups.size(); ++i) grid.cells[i].pilot_group = groups[i];
  return grid;
}

std::vector<std::size_t> assign_pilots(const CellGrid& grid) {
  auto mod = [](int value, int m) { return static_cast<std::size_t>(((value % m) + m) % m); };
  std::vector<std::size_t> out;
  out.reserve(grid.cells.size());
  for (const auto& cell : grid.cells) {
    switch (grid.reuse_factor) {
      case 1:
        out.push_back(0);
        break;
      case 3:
        out.push_back(mod(cell.q - cell.r, 3));
        break;
      case 7:
        out.push_back(mod(cell.q + 3 * cell.r, 7));
        break;
      default:
        throw DomainError("assign_pilots: unsupported reuse factor " + std::to_string(grid.reuse_factor) +
                          " (expected 1, 3 or 7)");
    }
  }
  return out;
}

double min_cochannel_distance(const CellGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.cells.size(); ++j) {
      if (grid.cells[i].pilot_group == grid.cells[j].pilot_group) {
        best = std::min(best, distance(grid.cells[i].center, grid.cells[j].center));
      }
    }
  }
  return best;
}

double contamination_sir_limit_db(double beta_home, std::span<const double> contaminating_betas) {
  if (!(beta_home > 0.0)) throw DomainError("contamination_sir_limit_db: home beta must be positive");
  CompensatedSum power;
  for (double b : contaminating_betas) {
    if (!(b >= 0.0)) throw DomainError("contamination_sir_limit_db: negative contaminating beta");
    power.add(b * b);
  }
  if (!(power.value() > 0.0)) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(beta_home * beta_home / power.value());
}

ContaminationSample simulate_contamination(std::size_t antennas, double beta_home,
                                           std::span<const double> contaminating_betas, double pilot_energy_snr,
                                           std::size_t trials, const Seed& seed, unsigned threads) {
  if (antennas == 0 || trials == 0) throw DomainError("simulate_contamination: need antennas and trials");
  const PilotBook book = build_pilot_book(1, 1);
  PilotAssignment assignment;
  assignment.pilot.assign(1 + contaminating_betas.size(), 0);
  assignment.beta.push_back(beta_home);
  assignment.beta.insert(assignment.beta.end(), contaminating_betas.begin(), contaminating_betas.end());
  assignment.targets = {0};

  auto trial = [&](std::size_t t) {
    const Seed trial_seed = seed.child(t);
    ComplexMatrix g = draw_complex_gaussian(trial_seed.child(0), antennas, assignment.beta.size());
    for (Eigen::Index i = 0; i < g.cols(); ++i) g.col(i) *= std::sqrt(assignment.beta[static_cast<std::size_t>(i)]);
    const ComplexMatrix y = synthesize_pilot_signal(g, book, assignment, pilot_energy_snr, trial_seed.child(1));
    const ChannelEstimate est = estimate_channels(y, book, assignment, pilot_energy_snr, Estimator::mmse);
    const ComplexVector a = est.estimate.col(0).normalized();
    const Eigen::RowVectorXcd gains = a.adjoint() * g;
    double interference = 0.0;
    for (Eigen::Index j = 1; j < gains.size(); ++j) interference += std::norm(gains(j));
    return std::pair{std::norm(gains(0)), interference};
  };
  const auto samples = parallel_map(trials, threads, trial);

  CompensatedSum desired, interference;
  for (const auto& [d, i] : samples) {
    desired.add(d);
    interference.add(i);
  }
  ContaminationSample out;
  out.antennas = antennas;
  out.desired_power = desired.value() / static_cast<double>(trials);
  out.interference_power = interference.value() / static_cast<double>(trials);
  out.sir_db = out.interference_power > 0.0 ? linear_to_db(out.desired_power / out.interference_power)
                                            : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace mmimo
