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

#include "mmimo/scatterer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mmimo/error.hpp"

namespace mmimo {

namespace {

// exp(-j2π·cycles) with the integer part removed first; path lengths are
// thousands of wavelengths and the fractional part carries the phase.
Complex phasor(double cycles) {
  const double frac = cycles - std::floor(cycles);
  const double angle = -2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

double leg_amplitude(double d, SpreadingLaw law) {
  return law == SpreadingLaw::spherical ? 1.0 / d : 1.0 / std::sqrt(d);
}

double path_amplitude(double d1, double d2, SpreadingLaw law) {
  const double product = d1 * d2;
  return law == SpreadingLaw::spherical ? 1.0 / product : 1.0 / std::sqrt(product);
}

double checked_distance(Point2 a, Point2 b, const char* what) {
  const double d = distance(a, b);
  if (!(d > 0.0)) {
    throw GeometryError(std::string("scatterer model: coincident points (") + what + ")");
  }
  return d;
}

}  // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool Region::contains(Point2 p) const {
  return std::abs(p.x - center.x) <= 0.5 * width && std::abs(p.y - center.y) <= 0.5 * height;
}

void ScattererScene::validate() const {
  if (antennas.empty()) throw GeometryError("scene has no antennas");
  if (scatterers.empty()) throw GeometryError("scene has no scatterers");
  if (!(wavelength > 0.0)) throw GeometryError("scene wavelength must be positive");
  if (!(region.width > 0.0) || !(region.height > 0.0)) throw GeometryError("scene region is empty");
}

ComplexVector scatterer_channel(const ScattererScene& scene, Point2 target) {
  scene.validate();
  const auto m_count = static_cast<Eigen::Index>(scene.antennas.size());
  ComplexVector out(m_count);
  std::vector<double> d2(scene.scatterers.size());
  for (std::size_t s = 0; s < scene.scatterers.size(); ++s) {
    d2[s] = checked_distance(scene.scatterers[s], target, "scatterer-target");
  }
  for (Eigen::Index m = 0; m < m_count; ++m) {
    Complex acc{0.0, 0.0};
    for (std::size_t s = 0; s < scene.scatterers.size(); ++s) {
      const double d1 = checked_distance(scene.antennas[m], scene.scatterers[s], "antenna-scatterer");
      acc += path_amplitude(d1, d2[s], scene.law) * phasor((d1 + d2[s]) / scene.wavelength);
    }
    out(m) = acc;
  }
  return out;
}

ComplexMatrix scatterer_channels(const ScattererScene& scene) {
  ComplexMatrix out(static_cast<Eigen::Index>(scene.antennas.size()),
                    static_cast<Eigen::Index>(scene.terminals.size()));
  for (std::size_t k = 0; k < scene.terminals.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = scatterer_channel(scene, scene.terminals[k]);
  }
  return out;
}

std::vector<Point2> draw_scatterers(const Seed& seed, const Region& region, std::size_t count) {
  RandomStream stream(seed);
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = region.center.x + (stream.uniform() - 0.5) * region.width;
    const double y = region.center.y + (stream.uniform() - 0.5) * region.height;
    out.push_back({x, y});
  }
  return out;
}

std::vector<Point2> linear_array(std::size_t count, Point2 center, double spacing) {
  std::vector<Point2> out;
  out.reserve(count);
  const double offset = 0.5 * static_cast<double>(count > 0 ? count - 1 : 0);
  for (std::size_t m = 0; m < count; ++m) {
    out.push_back({center.x, center.y + (static_cast<double>(m) - offset) * spacing});
  }
  return out;
}

Complex leg_coefficient(double d, double wavelength, SpreadingLaw law) {
  if (!(d > 0.0)) throw GeometryError("scatterer model: coincident points (leg)");
  return leg_amplitude(d, law) * phasor(d / wavelength);
}

ComplexMatrix leg_coefficients(std::span<const Point2> from, std::span<const Point2> scatterers,
                               double wavelength, SpreadingLaw law) {
  ComplexMatrix out(static_cast<Eigen::Index>(from.size()), static_cast<Eigen::Index>(scatterers.size()));
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t s = 0; s < scatterers.size(); ++s) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(s)) =
          leg_coefficient(distance(from[i], scatterers[s]), wavelength, law);
    }
  }
  return out;
}

}  // namespace mmimo
