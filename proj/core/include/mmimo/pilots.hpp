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
#include "mmimo/scatterer.hpp"

namespace mmimo {

/// floor(coherence / delay spread): how many mutually orthogonal pilots fit
/// in one coherence interval. Throws DomainError unless
/// 0 < delay_spread <= coherence.
std::size_t max_orthogonal_pilots(double coherence_s, double delay_spread_s);

/// τ×P matrix of pilot sequences. Columns built by build_pilot_book are
/// orthogonal with energy τ; custom books may be only partially orthogonal.
struct PilotBook {
  std::size_t tau = 0;
  ComplexMatrix sequences;

  std::size_t count() const noexcept { return static_cast<std::size_t>(sequences.cols()); }
  /// φ_iᵀ·conj(φ_k)/τ: how strongly pilot i leaks into the correlator of pilot k.
  Complex correlation(std::size_t i, std::size_t k) const;
};

/// Discrete-Fourier pilot family. Throws CapacityError when count > tau.
PilotBook build_pilot_book(std::size_t tau, std::size_t count);

/// Wraps arbitrary τ×P sequences, e.g. partially correlated designs.
PilotBook custom_pilot_book(ComplexMatrix sequences);

/// Who transmits which pilot during the training phase. Transmitters may
/// belong to any cell; `targets` lists the terminals whose channels the
/// receiving array wants.
struct PilotAssignment {
  std::vector<std::size_t> pilot;  ///< per transmitter: column of the book
  std::vector<double> beta;        ///< per transmitter: slow-fading gain at the receiving array
  std::vector<std::size_t> targets;

  void validate(const PilotBook& book) const;
};

/// Received training block Y = Σ_i sqrt(ρ_p)·g_i·φ_{pilot(i)}ᵀ + N with
/// unit-variance noise; `noiseless` drops N. Channels have one column per
/// transmitter.
ComplexMatrix synthesize_pilot_signal(const ComplexMatrix& channels, const PilotBook& book,
                                      const PilotAssignment& assignment, double pilot_snr, const Seed& noise_seed,
                                      bool noiseless = false);

enum class Estimator { least_squares, mmse };

struct ChannelEstimate {
  ComplexMatrix estimate;  ///< M × targets
  /// MMSE estimate quality γ_k (mean-square of the MMSE estimate):
  /// β_k² / (Σ_i |c_ik|²·β_i + 1/(ρ_p·τ)), the sum running over everyone whose
  /// pilot correlates with k's. Single cell: ρ_p·τ·β²/(1 + ρ_p·τ·β).
  std::vector<double> quality;
};

/// Correlates Y with each target's pilot. The least-squares output is
/// Y·conj(φ_k)/(τ·sqrt(ρ_p)); MMSE rescales it by β_k/(Σ_i|c_ik|²β_i + 1/(ρ_p τ)).
/// Shared pilots make the estimate a linear combination of every co-pilot
/// terminal's channel.
ChannelEstimate estimate_channels(const ComplexMatrix& received_pilots, const PilotBook& book,
                                  const PilotAssignment& assignment, double pilot_snr,
                                  Estimator estimator = Estimator::mmse);

/// γ = ρ_p·τ·β²/(1 + ρ_p·τ·β) for an uncontaminated pilot.
double estimate_quality(double pilot_energy_snr, double beta);

/// Hexagonal cell in axial coordinates.
struct HexCell {
  int q = 0;
  int r = 0;
  Point2 center;
  std::size_t pilot_group = 0;
};

struct CellGrid {
  std::vector<HexCell> cells;
  int reuse_factor = 1;
  double inter_site_distance = 1.0;
};

bool hex_adjacent(const HexCell& a, const HexCell& b);

/// Rings of cells around a center cell (0 rings = 1 cell, 1 = 7, 2 = 19),
/// with pilot groups filled by assign_pilots.
CellGrid make_hex_grid(std::size_t rings, int reuse_factor, double inter_site_distance = 1.0);

/// Pilot group per cell. Reuse 1: all zero. Reuse 3: (q - r) mod 3.
/// Reuse 7: (q + 3r) mod 7. Adjacent cells never share a group for reuse > 1.
/// Throws DomainError for other factors.
std::vector<std::size_t> assign_pilots(const CellGrid& grid);

/// Smallest center distance between two distinct cells of the same group;
/// +infinity when no group repeats.
double min_cochannel_distance(const CellGrid& grid);

/// Large-array SIR limit of MRC/MRT with contaminated estimates:
/// 10·log10(β_home² / Σ_j β_j²); +infinity when nothing contaminates.
double contamination_sir_limit_db(double beta_home, std::span<const double> contaminating_betas);

struct ContaminationSample {
  std::size_t antennas = 0;
  double desired_power = 0.0;       ///< E|aᴴg_home|², a = ĝ/‖ĝ‖
  double interference_power = 0.0;  ///< Σ_j E|aᴴg_j|² over co-pilot terminals
  double sir_db = 0.0;
};

/// Monte Carlo of one home terminal sharing its pilot with contaminators.
/// Pilots are synthesized and estimated through estimate_channels.
ContaminationSample simulate_contamination(std::size_t antennas, double beta_home,
                                           std::span<const double> contaminating_betas, double pilot_energy_snr,
                                           std::size_t trials, const Seed& seed, unsigned threads = 1);

}  // namespace mmimo
