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

namespace mmimo {

/// 2-D point in wavelengths.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

/// Axis-aligned rectangle given by its center and side lengths (wavelengths).
struct Region {
  Point2 center;
  double width = 800.0;
  double height = 800.0;
  bool contains(Point2 p) const;
};

/// Per-leg amplitude law of the single-bounce ray model.
enum class SpreadingLaw {
  cylindrical,  ///< amplitude 1/sqrt(d1·d2): 2-D wave spreading
  spherical,    ///< amplitude 1/(d1·d2)
};

struct ScattererScene {
  Region region;
  std::vector<Point2> antennas;
  std::vector<Point2> scatterers;
  std::vector<Point2> terminals;
  double wavelength = 1.0;
  SpreadingLaw law = SpreadingLaw::cylindrical;

  /// Throws GeometryError if the scene violates its invariants.
  void validate() const;
};

/// Single-bounce ray sum, no direct path:
///   g_m = Σ_s a(d1·d2) exp(-j2π(d1 + d2)/λ),  d1 = |antenna_m - s|, d2 = |s - target|.
/// Throws GeometryError for coincident points.
ComplexVector scatterer_channel(const ScattererScene& scene, Point2 target);

/// M×K matrix with one scatterer_channel column per scene terminal.
ComplexMatrix scatterer_channels(const ScattererScene& scene);

/// Uniform scatterer placement inside `region`.
std::vector<Point2> draw_scatterers(const Seed& seed, const Region& region, std::size_t count);

/// Vertical uniform linear array centered at `center`.
std::vector<Point2> linear_array(std::size_t count, Point2 center, double spacing);

/// One ray leg of length d: amplitude (1/sqrt(d) or 1/d) times exp(-j2π d/λ).
Complex leg_coefficient(double d, double wavelength, SpreadingLaw law);

/// Leg coefficient matrix A (rows = `from`, cols = scatterers):
/// A(i, s) = sqrt-or-linear amplitude · exp(-j2π d/λ). Field at any point p is
/// then A · b(p) with b built from the same routine, which factorizes the ray
/// sum for dense grids. Matches scatterer_channel to rounding.
ComplexMatrix leg_coefficients(std::span<const Point2> from, std::span<const Point2> scatterers,
                               double wavelength, SpreadingLaw law);

}  // namespace mmimo
