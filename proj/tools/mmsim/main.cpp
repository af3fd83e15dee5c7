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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mmsim/config.hpp"
#include "mmsim/experiments.hpp"
#include "mmimo/error.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int report(const std::string& kind, const std::string& message, int code) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["message"] = message;
  std::cerr << line.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mmsim: massive MIMO batch experiments"};
  app.set_version_flag("--version", mmsim::version());
  app.require_subcommand(1);

  std::string config_path;
  mmsim::Overrides overrides;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned threads = 0;

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("--config", config_path, "Config file")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override the master seed");
  auto* trials_opt = run->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
  run->add_flag("--paper-scale", overrides.paper_scale, "Use the full figure parameters as defaults");
  run->add_option("--out", overrides.output_dir, "Output directory (overrides output_dir)");
  run->add_option("--channels", overrides.channels, "Measured channels (CFCSV) for svd-spread or mrt-sumrate")
      ->check(CLI::ExistingFile);
  run->add_option("--threads", threads, "Worker threads, 0 = all cores");

  auto* validate = app.add_subcommand("validate", "Check a config file and print the resolved configuration");
  validate->add_option("--config", config_path, "Config file")->required();
  validate->add_flag("--paper-scale", overrides.paper_scale, "Resolve with paper-scale defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  mmsim::ExperimentConfig config;
  try {
    overrides.has_seed = seed_opt->count() > 0;
    overrides.seed = seed;
    overrides.has_trials = trials_opt->count() > 0;
    overrides.trials = trials;
    config = mmsim::resolve_config(mmsim::parse_config_file(config_path), overrides);
  } catch (const mmimo::Error& e) {
    return report(e.kind(), e.what(), kExitConfig);
  }

  if (validate->parsed()) {
    std::cout << config.canonical_text();
    std::cout << "# config_hash = " << config.hash() << "\n";
    return 0;
  }

  try {
    const auto result = mmsim::run_experiment(config, threads);
    mmsim::emit_tables(config, result, config.output_dir);
    std::cout << mmsim::summary_json(config, result)["metrics"].dump(2) << "\n";
  } catch (const mmimo::ConfigError& e) {
    return report(e.kind(), e.what(), kExitConfig);
  } catch (const mmimo::ParseError& e) {
    return report(e.kind(), e.what(), kExitConfig);
  } catch (const mmimo::Error& e) {
    return report(e.kind(), e.what(), kExitRuntime);
  } catch (const std::exception& e) {
    return report("internal", e.what(), kExitRuntime);
  }
  return 0;
}
