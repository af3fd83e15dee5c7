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

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mmimo/capacity.hpp"
#include "mmimo/channel.hpp"
#include "mmimo/field_map.hpp"
#include "mmimo/linalg.hpp"
#include "mmimo/transceiver.hpp"

namespace {

void BM_SingularValueSpread(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto h = mmimo::gen_iid_channel(mmimo::Seed(1), m, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mmimo::singular_value_spread_db(h));
}
BENCHMARK(BM_SingularValueSpread)->Arg(4)->Arg(32)->Arg(128);

void BM_MrtSumRate(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto h = mmimo::gen_iid_channel(mmimo::Seed(2), m, 4);
  for (auto _ : state) {
    const double power = mmimo::power_for_reference_snr(h, 1.0, 10.0);
    benchmark::DoNotOptimize(mmimo::evaluate_downlink(h, mmimo::mrt_precoder(h, power), 1.0).sum_rate());
  }
}
BENCHMARK(BM_MrtSumRate)->Arg(4)->Arg(128);

void BM_FieldMapTrial(benchmark::State& state) {
  mmimo::FocusingSetup setup;
  mmimo::GridSpec grid;
  grid.half_width = static_cast<double>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmimo::field_map(setup, mmimo::PrecodingScheme::mrt, grid, 1, mmimo::Seed(3, {t++})));
  }
}
BENCHMARK(BM_FieldMapTrial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_MaxMinPowerControl(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<double> betas, gammas;
  for (std::size_t i = 0; i < k; ++i) {
    betas.push_back(std::pow(10.0, -3.0 * static_cast<double>(i) / static_cast<double>(k)));
    gammas.push_back(10.0 * betas.back() * betas.back() / (1.0 + 10.0 * betas.back()));
  }
  for (auto _ : state) benchmark::DoNotOptimize(mmimo::maxmin_power_control(betas, gammas, 6400, 1e3));
}
BENCHMARK(BM_MaxMinPowerControl)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
