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

#include <gtest/gtest.h>

#include <cmath>

#include "mmimo/error.hpp"
#include "mmimo/rural.hpp"

using namespace mmimo;

TEST(RuralScenario, LinkBudget) {
  const RuralScenario s;
  EXPECT_NEAR(s.noise_dbm(), -92.0, 0.05);
  EXPECT_EQ(s.coherence_symbols(), 32800u);
  EXPECT_EQ(s.pilot_length(), 8200u);
  // 120 W = 50.79 dBm over a -92 dBm noise floor.
  EXPECT_NEAR(10.0 * std::log10(s.rho_dl()), 10.0 * std::log10(120e3) - s.noise_dbm(), 1e-9);
  EXPECT_NEAR(10.0 * std::log10(s.rho_pilot()), 10.0 * std::log10(200.0) - s.noise_dbm(), 1e-9);
}

TEST(RuralScenario, PinnedFieldsRequireOverride) {
  RuralScenario s;
  EXPECT_NO_THROW(s.validate());
  s.antennas = 3200;
  EXPECT_THROW(s.validate(), ConfigError);
  EXPECT_NO_THROW(s.validate(true));
  s = RuralScenario{};
  s.shadow_sigma_db = 6.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s = RuralScenario{};
  s.radius_km = -1.0;
  EXPECT_THROW(s.validate(true), ConfigError);
  s = RuralScenario{};
  s.pilot_fraction = 1.0;
  EXPECT_THROW(s.validate(true), ConfigError);
  s = RuralScenario{};
  EXPECT_THROW(rural_broadband(s, Seed(1), 0), DomainError);
}

TEST(RuralBroadband, ServesNinetyFivePercent) {
  const auto r = rural_broadband(RuralScenario{}, Seed(2), 3);
  ASSERT_EQ(r.drops.size(), 3u);
  for (const auto& d : r.drops) {
    EXPECT_EQ(d.served, 950u);
    EXPECT_GT(d.throughput_mbps, 0.0);
    EXPECT_GT(d.throughput_mbps_perfect_csi, d.throughput_mbps);
    EXPECT_NEAR(d.sum_throughput_gbps, 950.0 * d.throughput_mbps / 1000.0, 1e-9);
    EXPECT_NEAR(d.throughput_mbps, 0.75 * 20.0 * std::log2(1.0 + d.common_sinr), 1e-9);
  }
  EXPECT_GT(r.mean_throughput_mbps, 10.0);
  EXPECT_LT(r.mean_throughput_mbps, 40.0);
  EXPECT_LE(r.p5_throughput_mbps, r.mean_throughput_mbps);
}

TEST(RuralBroadband, DeterministicAcrossThreads) {
  const auto a = rural_broadband(RuralScenario{}, Seed(3), 4, 1);
  const auto b = rural_broadband(RuralScenario{}, Seed(3), 4, 3);
  ASSERT_EQ(a.drops.size(), b.drops.size());
  for (std::size_t d = 0; d < a.drops.size(); ++d) EXPECT_EQ(a.drops[d].common_sinr, b.drops[d].common_sinr);
  EXPECT_EQ(a.mean_throughput_mbps, b.mean_throughput_mbps);
}

TEST(RuralBroadband, OverrideAllowsSensitivityStudy) {
  RuralScenario s;
  s.antennas = 3200;
  EXPECT_THROW(rural_broadband(s, Seed(4), 1), ConfigError);
  const auto half = rural_broadband(s, Seed(4), 1, 1, true);
  const auto full = rural_broadband(RuralScenario{}, Seed(4), 1);
  EXPECT_LT(half.drops[0].common_sinr, full.drops[0].common_sinr);
}
