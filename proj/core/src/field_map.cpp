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

#include "mmimo/field_map.hpp"

#include <cmath>
#include <string>

#include "mmimo/error.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/stats.hpp"

namespace mmimo {

namespace {

// Trials are summed in fixed-size blocks, then blocks in index order, so the
// floating-point reduction tree does not depend on the worker count.
constexpr std::size_t kTrialsPerBlock = 8;

struct Accumulator {
  std::vector<double> grid;
  std::vector<double> users;
};

}  // namespace

std::vector<Point2> FocusingSetup::antenna_positions() const {
  return linear_array(antennas, {region.center.x - bs_distance, region.center.y}, antenna_spacing);
}

void FocusingSetup::validate() const {
  if (antennas == 0) throw GeometryError("focusing setup: no antennas");
  if (scatterers == 0) throw GeometryError("focusing setup: no scatterers");
  if (users.empty()) throw GeometryError("focusing setup: no users");
  if (!(wavelength > 0.0)) throw GeometryError("focusing setup: wavelength must be positive");
  if (!(bs_distance > 0.5 * region.width)) {
    throw GeometryError("focusing setup: base station must be outside the scattering region");
  }
}

std::size_t GridSpec::side() const {
  if (!(step > 0.0) || !(half_width >= 0.0)) throw GeometryError("grid: step must be positive");
  return static_cast<std::size_t>(std::floor(2.0 * half_width / step + 1e-9)) + 1;
}

std::vector<Point2> GridSpec::points() const {
  const std::size_t n = side();
  std::vector<Point2> out;
  out.reserve(n * n);
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      out.push_back({center.x - half_width + static_cast<double>(ix) * step,
                     center.y - half_width + static_cast<double>(iy) * step});
    }
  }
  return out;
}

std::vector<double> FieldMap::relative_db() const {
  std::vector<double> out;
  out.reserve(average_power.size());
  for (double p : average_power) out.push_back(linear_to_db(p / spatial_mean));
  return out;
}

double FieldMap::user_relative_db(std::size_t user) const { return linear_to_db(user_power.at(user) / spatial_mean); }

FieldMap field_map(const FocusingSetup& setup, PrecodingScheme scheme, const GridSpec& grid, std::size_t trials,
                   const Seed& seed, unsigned threads) {
  setup.validate();
  if (trials == 0) throw DomainError("field_map: at least one trial required");

  const auto antennas = setup.antenna_positions();
  const auto points = grid.points();
  const std::size_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;

  auto run_block = [&](std::size_t block) {
    Accumulator acc{std::vector<double>(points.size(), 0.0), std::vector<double>(setup.users.size(), 0.0)};
    const std::size_t first = block * kTrialsPerBlock;
    const std::size_t last = std::min(trials, first + kTrialsPerBlock);
    for (std::size_t t = first; t < last; ++t) {
      const auto scatterers = draw_scatterers(seed.child(t), setup.region, setup.scatterers);
      const ComplexMatrix a = leg_coefficients(antennas, scatterers, setup.wavelength, setup.law);
      const ComplexMatrix b_users = leg_coefficients(setup.users, scatterers, setup.wavelength, setup.law);
      const ComplexMatrix h = a * b_users.transpose();
      const Precoder precoder = make_precoder(scheme, h, 1.0);

      // Field of the target stream at p is (Aᵀw₀)ᵀ·b(p).
      const ComplexVector per_scatterer = a.transpose() * precoder.weights.col(0);
      const ComplexVector at_users = h.transpose() * precoder.weights.col(0);
      for (Eigen::Index k = 0; k < at_users.size(); ++k) acc.users[static_cast<std::size_t>(k)] += std::norm(at_users(k));

      for (std::size_t p = 0; p < points.size(); ++p) {
        Complex field{0.0, 0.0};
        for (std::size_t s = 0; s < scatterers.size(); ++s) {
          field += leg_coefficient(distance(points[p], scatterers[s]), setup.wavelength, setup.law) *
                   per_scatterer(static_cast<Eigen::Index>(s));
        }
        acc.grid[p] += std::norm(field);
      }
    }
    return acc;
  };

  const auto partial = parallel_map(blocks, threads, run_block);

  FieldMap out;
  out.points = points;
  out.trials = trials;
  out.average_power.assign(points.size(), 0.0);
  out.user_power.assign(setup.users.size(), 0.0);
  for (const auto& block : partial) {
    for (std::size_t p = 0; p < points.size(); ++p) out.average_power[p] += block.grid[p];
    for (std::size_t k = 0; k < out.user_power.size(); ++k) out.user_power[k] += block.users[k];
  }
  const double scale = 1.0 / static_cast<double>(trials);
  for (double& v : out.average_power) v *= scale;
  for (double& v : out.user_power) v *= scale;
  out.spatial_mean = mean(out.average_power);
  return out;
}

}  // namespace mmimo
