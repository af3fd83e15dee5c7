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

#include <cstdint>
#include <functional>
#include <vector>

#include "mmimo/linalg.hpp"

// Reference computations used only by the tests. They avoid the library's
// own code paths: their own RNG, their own eigen-solver, direct formulas.
namespace oracle {

/// Eigenvalues (descending) of a Hermitian matrix by cyclic Jacobi rotations
/// on its real 2n×2n embedding; every eigenvalue appears once.
std::vector<double> hermitian_eigenvalues(const mmimo::ComplexMatrix& a);

/// Singular values of H from the eigenvalues of HᴴH.
std::vector<double> singular_values(const mmimo::ComplexMatrix& h);

/// Composite Simpson rule over [a, b] with an even number of panels.
double simpson(const std::function<double(double)>& f, double a, double b, int panels);

/// E[log2(1 + a·X)], X ~ Exp(1), by quadrature.
double expected_log2_exponential(double a);

/// Largest common downlink MRT SINR reachable with Ση ≤ 1, found by
/// bisection on the target with a fixed-point power iteration at each step.
/// Returns the SINR; `etas` receives the powers of the last feasible target.
double maxmin_sinr_bisection(const std::vector<double>& betas, const std::vector<double>& gammas,
                             std::size_t antennas, double rho, std::vector<double>* etas = nullptr);

struct UplinkScenario {
  std::size_t antennas = 0;
  std::vector<double> betas;
  double rho = 1.0;        ///< per-terminal data SNR
  double rho_pilot = 1.0;  ///< per-symbol pilot SNR
  std::size_t tau = 1;
  std::size_t coherence = 196;
  bool zero_forcing = false;
};

/// Per-terminal net ergodic rate of MRC/ZF on MMSE estimates with the receiver
/// knowing the estimates, averaged over `draws` channel realizations.
std::vector<double> uplink_monte_carlo(const UplinkScenario& s, std::size_t draws, std::uint64_t seed);

/// Per-terminal ergodic downlink MRT rate with power fractions η and MMSE
/// estimates, the terminal knowing its instantaneous gain.
std::vector<double> downlink_mrt_monte_carlo(std::size_t antennas, const std::vector<double>& betas,
                                             const std::vector<double>& gammas, const std::vector<double>& etas,
                                             double rho, std::size_t draws, std::uint64_t seed);

/// CN(0, 1) matrix from std::mt19937_64.
mmimo::ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace oracle
