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

#include "mmsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mmimo/error.hpp"
#include "mmimo/format.hpp"

namespace mmsim {

using mmimo::ParseError;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

bool parse_unsigned(const std::string& text, std::uint64_t& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_real(const std::string& text, double& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

[[noreturn]] void mismatch(const std::string& path, const std::string& value, const char* expected) {
  throw ParseError("config key '" + path + "': expected " + expected + ", got '" + value + "'");
}

// Validates `value` against the spec and returns its canonical form.
std::string canonicalize(const ParamSpec& spec, const std::string& path, const std::string& value) {
  switch (spec.kind) {
    case ValueKind::unsigned_int: {
      std::uint64_t v = 0;
      if (!parse_unsigned(value, v)) mismatch(path, value, "a non-negative integer");
      return std::to_string(v);
    }
    case ValueKind::real: {
      double v = 0.0;
      if (!parse_real(value, v)) mismatch(path, value, "a finite number");
      return mmimo::format_double(v);
    }
    case ValueKind::boolean:
      if (value == "true" || value == "false") return value;
      mismatch(path, value, "true or false");
    case ValueKind::text:
      if (value.empty()) mismatch(path, value, "a non-empty string");
      if (!spec.choices.empty() && std::find(spec.choices.begin(), spec.choices.end(), value) == spec.choices.end()) {
        std::string options;
        for (const auto& c : spec.choices) options += (options.empty() ? "" : ", ") + c;
        throw ParseError("config key '" + path + "': '" + value + "' is not one of " + options);
      }
      return value;
    case ValueKind::unsigned_list:
    case ValueKind::real_list: {
      const auto items = split_list(value);
      if (items.empty()) mismatch(path, value, "a comma-separated list");
      std::string out;
      for (const auto& item : items) {
        if (!out.empty()) out += ",";
        if (spec.kind == ValueKind::unsigned_list) {
          std::uint64_t v = 0;
          if (!parse_unsigned(item, v)) mismatch(path, value, "a list of non-negative integers");
          out += std::to_string(v);
        } else {
          double v = 0.0;
          if (!parse_real(item, v)) mismatch(path, value, "a list of finite numbers");
          out += mmimo::format_double(v);
        }
      }
      return out;
    }
  }
  return value;
}

ParamSpec uint_param(std::string name, std::string desk, std::string paper = {}) {
  if (paper.empty()) paper = desk;
  return {std::move(name), ValueKind::unsigned_int, std::move(desk), std::move(paper), {}};
}
ParamSpec real_param(std::string name, std::string desk, std::string paper = {}) {
  if (paper.empty()) paper = desk;
  return {std::move(name), ValueKind::real, std::move(desk), std::move(paper), {}};
}
ParamSpec list_param(std::string name, ValueKind kind, std::string desk, std::string paper = {}) {
  if (paper.empty()) paper = desk;
  return {std::move(name), kind, std::move(desk), std::move(paper), {}};
}
ParamSpec choice_param(std::string name, std::string value, std::vector<std::string> choices) {
  return {std::move(name), ValueKind::text, value, value, std::move(choices)};
}
ParamSpec bool_param(std::string name, std::string value) {
  return {std::move(name), ValueKind::boolean, value, value, {}};
}

std::vector<ExperimentSpec> build_specs() {
  std::vector<ExperimentSpec> specs;

  specs.push_back({"focusing-map", 100, 10000,
                   {
                       uint_param("antennas", "64"),
                       real_param("antenna_spacing", "12.5"),
                       uint_param("scatterers", "400"),
                       real_param("region_size", "800"),
                       real_param("bs_distance", "1600"),
                       real_param("user_offset", "3"),
                       real_param("grid_half_width", "40"),
                       real_param("grid_step", "1"),
                       choice_param("spreading", "cylindrical", {"cylindrical", "spherical"}),
                   }});

  specs.push_back({"svd-spread", 10000, 10000,
                   {
                       list_param("antennas", ValueKind::unsigned_list, "4,32,128"),
                       uint_param("terminals", "4"),
                   }});

  specs.push_back({"mrt-sumrate", 2000, 10000,
                   {
                       list_param("antennas", ValueKind::unsigned_list, "4,8,16,32,64,128"),
                       uint_param("terminals", "4"),
                       real_param("reference_snr_db", "10"),
                   }});

  specs.push_back({"ee-se-tradeoff", 1, 1,
                   {
                       uint_param("antennas", "100"),
                       uint_param("terminals", "40"),
                       uint_param("coherence_length", "196"),
                       real_param("beta", "1"),
                       real_param("rho_min_db", "-30"),
                       real_param("rho_max_db", "30"),
                       real_param("rho_step_db", "0.5"),
                   }});

  specs.push_back({"pilot-contamination", 200, 2000,
                   {
                       list_param("antennas", ValueKind::unsigned_list, "16,64,256,1024,10000"),
                       real_param("beta_home", "1"),
                       list_param("contaminating_betas", ValueKind::real_list, "1"),
                       real_param("pilot_snr_db", "10"),
                       real_param("coherence_s", "0.001"),
                       real_param("delay_spread_s", "0.000005"),
                       uint_param("reuse_rings", "2"),
                       real_param("inter_site_distance", "1"),
                   }});

  specs.push_back({"rural-broadband", 500, 500,
                   {
                       uint_param("antennas", "6400"),
                       uint_param("terminals", "1000"),
                       real_param("total_power_w", "120"),
                       real_param("bandwidth_hz", "20000000"),
                       real_param("carrier_hz", "1900000000"),
                       real_param("radius_km", "6"),
                       real_param("exclusion_km", "0.035"),
                       real_param("base_height_m", "30"),
                       real_param("terminal_height_m", "5"),
                       real_param("noise_figure_db", "9"),
                       real_param("terminal_gain_db", "8"),
                       real_param("base_gain_db", "0"),
                       real_param("shadow_sigma_db", "8"),
                       real_param("pilot_fraction", "0.25"),
                       real_param("drop_fraction", "0.05"),
                       real_param("pilot_power_w", "0.2"),
                       real_param("coherence_time_s", "0.164"),
                       real_param("coherence_bandwidth_hz", "200000"),
                       bool_param("allow_override", "false"),
                   }});
  return specs;
}

const std::set<std::string>& top_level_keys() {
  static const std::set<std::string> keys{"experiment", "seed", "trials", "output_dir"};
  return keys;
}

}  // namespace

const std::vector<ExperimentSpec>& experiment_specs() {
  static const std::vector<ExperimentSpec> specs = build_specs();
  return specs;
}

const ExperimentSpec& find_experiment(std::string_view name) {
  for (const auto& spec : experiment_specs()) {
    if (spec.name == name) return spec;
  }
  std::string known;
  for (const auto& spec : experiment_specs()) known += (known.empty() ? "" : ", ") + spec.name;
  throw ParseError("config key 'experiment': unknown experiment '" + std::string(name) + "' (known: " + known + ")");
}

RawConfig parse_config_text(std::istream& in, const std::string& source) {
  RawConfig raw;
  raw.source = source;
  std::map<std::string, int> seen;
  std::string section;
  std::string line;
  int number = 0;
  auto fail = [&](const std::string& message) -> void {
    throw ParseError(source + ":" + std::to_string(number) + ": " + message);
  };
  while (std::getline(in, line)) {
    ++number;
    const auto comment = line.find_first_of("#;");
    const std::string text = trim(comment == std::string::npos ? line : line.substr(0, comment));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') fail("unterminated section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      if (section.empty()) fail("empty section name");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    RawEntry entry{section, trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 1)),
                   number};
    if (entry.key.empty()) fail("missing key before '='");
    if (entry.value.empty()) fail("key '" + entry.path() + "' has no value");
    const auto [it, inserted] = seen.emplace(entry.path(), number);
    if (!inserted) {
      fail("duplicate key '" + entry.path() + "' (first set on line " + std::to_string(it->second) + ")");
    }
    raw.entries.push_back(std::move(entry));
  }
  return raw;
}

RawConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw mmimo::IoError("cannot open config file " + path.string());
  return parse_config_text(in, path.string());
}

const std::string& ExperimentConfig::value(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw mmimo::ConfigError("experiment " + experiment + " has no parameter '" + std::string(key) + "'");
}

std::uint64_t ExperimentConfig::get_unsigned(std::string_view key) const {
  std::uint64_t v = 0;
  parse_unsigned(value(key), v);
  return v;
}

double ExperimentConfig::get_real(std::string_view key) const {
  double v = 0.0;
  parse_real(value(key), v);
  return v;
}

bool ExperimentConfig::get_bool(std::string_view key) const { return value(key) == "true"; }

const std::string& ExperimentConfig::get_text(std::string_view key) const { return value(key); }

std::vector<std::uint64_t> ExperimentConfig::get_unsigned_list(std::string_view key) const {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(value(key))) {
    std::uint64_t v = 0;
    parse_unsigned(item, v);
    out.push_back(v);
  }
  return out;
}

std::vector<double> ExperimentConfig::get_real_list(std::string_view key) const {
  std::vector<double> out;
  for (const auto& item : split_list(value(key))) {
    double v = 0.0;
    parse_real(item, v);
    out.push_back(v);
  }
  return out;
}

std::string ExperimentConfig::canonical_text() const {
  std::ostringstream out;
  out << "experiment = " << experiment << "\n";
  out << "seed = " << seed << "\n";
  out << "trials = " << trials << "\n";
  out << "profile = " << profile << "\n";
  out << "channels = " << channels << "\n";
  out << "[" << experiment << "]\n";
  for (const auto& [k, v] : params) out << k << " = " << v << "\n";
  return out.str();
}

std::string ExperimentConfig::hash() const {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  static constexpr char digits[] = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

ExperimentConfig resolve_config(const RawConfig& raw, const Overrides& overrides) {
  const RawEntry* experiment_entry = nullptr;
  for (const auto& e : raw.entries) {
    if (e.section.empty() && e.key == "experiment") experiment_entry = &e;
  }
  if (experiment_entry == nullptr) throw ParseError(raw.source + ": missing required key 'experiment'");
  const ExperimentSpec& spec = find_experiment(experiment_entry->value);

  ExperimentConfig cfg;
  cfg.experiment = spec.name;
  cfg.profile = overrides.paper_scale ? "paper-scale" : "desk";
  cfg.trials = overrides.paper_scale ? spec.paper_trials : spec.desk_trials;
  cfg.output_dir = "results/" + spec.name;
  cfg.channels = overrides.channels;
  for (const auto& p : spec.params) cfg.params.emplace_back(p.name, overrides.paper_scale ? p.paper_default : p.desk_default);

  auto where = [&](const RawEntry& e) { return raw.source + ":" + std::to_string(e.line) + ": "; };
  for (const auto& e : raw.entries) {
    try {
      if (e.section.empty()) {
        if (!top_level_keys().contains(e.key)) {
          throw ParseError("unknown key '" + e.path() + "'");
        }
        if (e.key == "seed") {
          if (!parse_unsigned(e.value, cfg.seed)) mismatch(e.path(), e.value, "a 64-bit unsigned integer");
        } else if (e.key == "trials") {
          if (!parse_unsigned(e.value, cfg.trials) || cfg.trials == 0) mismatch(e.path(), e.value, "a positive integer");
        } else if (e.key == "output_dir") {
          cfg.output_dir = e.value;
        }
        continue;
      }
      if (e.section != spec.name) {
        throw ParseError("section [" + e.section + "] does not match experiment '" + spec.name + "' (key '" +
                         e.path() + "')");
      }
      const auto it = std::find_if(spec.params.begin(), spec.params.end(),
                                   [&](const ParamSpec& p) { return p.name == e.key; });
      if (it == spec.params.end()) throw ParseError("unknown key '" + e.path() + "'");
      const auto slot = static_cast<std::size_t>(it - spec.params.begin());
      cfg.params[slot].second = canonicalize(*it, e.path(), e.value);
    } catch (const ParseError& err) {
      throw ParseError(where(e) + err.what());
    }
  }

  if (overrides.has_seed) cfg.seed = overrides.seed;
  if (overrides.has_trials) {
    if (overrides.trials == 0) throw ParseError("--trials must be positive");
    cfg.trials = overrides.trials;
  }
  if (!overrides.output_dir.empty()) cfg.output_dir = overrides.output_dir;
  return cfg;
}

ExperimentConfig default_config(const std::string& experiment, bool paper_scale) {
  RawConfig raw;
  raw.source = "<defaults>";
  raw.entries.push_back({"", "experiment", experiment, 1});
  Overrides o;
  o.paper_scale = paper_scale;
  return resolve_config(raw, o);
}

}  // namespace mmsim
