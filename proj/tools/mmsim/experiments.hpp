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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmsim/config.hpp"

namespace mmsim {

/// CSV payload with a fixed header; cells are already formatted.
struct Table {
  std::string name;
  std::string header;
  std::vector<std::string> rows;

  std::string csv() const;
};

struct ExperimentResult {
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  std::vector<Table> tables;

  const Table& table(const std::string& name) const;
};

/// Runs the configured experiment. `threads` = 0 uses every hardware thread;
/// the output does not depend on it.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads = 0);

/// Summary document: version, seed, config hash, resolved config, metrics.
nlohmann::ordered_json summary_json(const ExperimentConfig& config, const ExperimentResult& result);

/// Writes one CSV per table plus summary.json into `dir`. Throws IoError.
void emit_tables(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& dir);

const char* version();

}  // namespace mmsim
