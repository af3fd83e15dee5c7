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

#include "mmimo/linalg.hpp"

#include <cmath>
#include <string>

#include "mmimo/error.hpp"

namespace mmimo {

ComplexMatrix draw_complex_gaussian(const Seed& seed, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("draw_complex_gaussian: zero dimension (" + std::to_string(rows) + "x" +
                         std::to_string(cols) + ")");
  }
  RandomStream stream(seed);
  ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      out(r, c) = stream.complex_normal();
    }
  }
  return out;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NumericError(std::string(what) + ": matrix has non-finite entries");
  }
}

std::vector<double> singular_values(const ComplexMatrix& h) {
  require_finite(h, "singular_values");
  if (h.size() == 0) {
    return {};
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(h);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

double singular_value_spread_db(const ComplexMatrix& h) {
  const auto sv = singular_values(h);
  if (sv.empty() || !(sv.front() > 0.0) || sv.back() < kRankThreshold * sv.front()) {
    throw RankError("singular_value_spread_db: matrix is rank deficient");
  }
  return 20.0 * std::log10(sv.front() / sv.back());
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& h) {
  require_finite(h, "pseudo_inverse");
  if (h.size() == 0 || h.rows() < h.cols()) {
    throw RankError("pseudo_inverse: " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                    " matrix cannot have full column rank");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (!(sv(0) > 0.0) || sv(sv.size() - 1) < kRankThreshold * sv(0)) {
    throw RankError("pseudo_inverse: matrix is rank deficient");
  }
  const Eigen::VectorXd inv = sv.cwiseInverse();
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace mmimo
