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
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace mmsim {

enum class ValueKind { unsigned_int, real, text, unsigned_list, real_list, boolean };

/// One experiment parameter with its desk-scale and paper-scale defaults
/// (canonical text form).
struct ParamSpec {
  std::string name;
  ValueKind kind = ValueKind::real;
  std::string desk_default;
  std::string paper_default;
  std::vector<std::string> choices;  ///< non-empty restricts a text value
};

struct ExperimentSpec {
  std::string name;
  std::uint64_t desk_trials = 1;
  std::uint64_t paper_trials = 1;
  std::vector<ParamSpec> params;
};

const std::vector<ExperimentSpec>& experiment_specs();
const ExperimentSpec& find_experiment(std::string_view name);

/// A key = value pair as written in the file.
struct RawEntry {
  std::string section;  ///< empty for top-level keys
  std::string key;
  std::string value;
  int line = 0;

  std::string path() const { return section.empty() ? key : section + "." + key; }
};

struct RawConfig {
  std::string source;
  std::vector<RawEntry> entries;
};

/// INI-style text: `key = value`, `[section]`, `#` or `;` comments.
/// Duplicate keys and malformed lines throw ParseError with the line number.
RawConfig parse_config_text(std::istream& in, const std::string& source);
RawConfig parse_config_file(const std::filesystem::path& path);

struct Overrides {
  bool paper_scale = false;
  bool has_seed = false;
  std::uint64_t seed = 0;
  bool has_trials = false;
  std::uint64_t trials = 0;
  std::string output_dir;
  std::string channels;
};

/// Fully resolved configuration: every value that affects a run, including
/// defaults, in canonical form.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;
  std::string output_dir;
  std::string profile = "desk";
  std::string channels;
  std::vector<std::pair<std::string, std::string>> params;

  const std::string& value(std::string_view key) const;
  std::uint64_t get_unsigned(std::string_view key) const;
  double get_real(std::string_view key) const;
  bool get_bool(std::string_view key) const;
  const std::string& get_text(std::string_view key) const;
  std::vector<std::uint64_t> get_unsigned_list(std::string_view key) const;
  std::vector<double> get_real_list(std::string_view key) const;

  /// Canonical `key = value` listing; the hash is taken over this text.
  std::string canonical_text() const;
  std::string hash() const;
};

/// Checks keys, types and section names and fills defaults. Throws ParseError
/// naming the key path.
ExperimentConfig resolve_config(const RawConfig& raw, const Overrides& overrides = {});

/// Minimal config with only the experiment name (and defaults for the rest).
ExperimentConfig default_config(const std::string& experiment, bool paper_scale = false);

}  // namespace mmsim
