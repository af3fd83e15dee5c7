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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mmimo/random.hpp"

namespace mmimo {

using Complex = std::complex<double>;
/// Rows are base-station antennas, columns are terminals, unless stated.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// σ_min/σ_max below this is treated as rank deficient.
inline constexpr double kRankThreshold = 1e-12;

/// i.i.d. CN(0, 1) entries, drawn in row-major order from `seed`.
ComplexMatrix draw_complex_gaussian(const Seed& seed, std::size_t rows, std::size_t cols);

/// Throws NumericError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

/// min(rows, cols) singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& h);

/// 20·log10(σ_max/σ_min). Throws RankError when σ_min/σ_max < kRankThreshold.
double singular_value_spread_db(const ComplexMatrix& h);

/// Moore-Penrose inverse of a full-column-rank matrix (K×M for an M×K input).
ComplexMatrix pseudo_inverse(const ComplexMatrix& h);

}  // namespace mmimo
