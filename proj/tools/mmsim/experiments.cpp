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

#include "mmsim/experiments.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <string_view>
#include <type_traits>

#include "mmimo/capacity.hpp"
#include "mmimo/channel.hpp"
#include "mmimo/error.hpp"
#include "mmimo/field_map.hpp"
#include "mmimo/format.hpp"
#include "mmimo/linalg.hpp"
#include "mmimo/measured.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/pilots.hpp"
#include "mmimo/rural.hpp"
#include "mmimo/stats.hpp"
#include "mmimo/transceiver.hpp"

#ifndef MMSIM_VERSION
#define MMSIM_VERSION "0.0.0"
#endif

namespace mmsim {

namespace {

using json = nlohmann::ordered_json;

std::string cell(double v) { return mmimo::format_double(v); }
std::string cell(const std::string& v) { return v; }
std::string cell(const char* v) { return v; }
template <typename T>
  requires std::is_integral_v<T>
std::string cell(T v) {
  return std::to_string(v);
}

template <typename... Args>
std::string row(const Args&... args) {
  std::string out;
  ((out += (out.empty() ? "" : ",") + cell(args)), ...);
  return out;
}

// JSON has no infinity; unbounded values are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Stream tags keep experiments on disjoint random streams for the same seed.
mmimo::Seed root_seed(const ExperimentConfig& cfg, std::uint64_t tag) { return mmimo::Seed(cfg.seed).child(tag); }

std::size_t to_size(std::uint64_t v, const char* what) {
  if (v == 0) throw mmimo::ConfigError(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

// Either i.i.d. draws or slices of a measured set, one matrix per trial.
struct ChannelSource {
  bool measured = false;
  mmimo::MeasuredChannelSet set;

  std::size_t trials(std::size_t configured) const { return measured ? set.frequency_points() : configured; }

  void check(std::size_t m, std::size_t k) const {
    if (!measured) return;
    if (m > set.antennas || k > set.terminals) {
      throw mmimo::ConfigError("measured channels have " + std::to_string(set.antennas) + " antennas and " +
                               std::to_string(set.terminals) + " terminals; requested " + std::to_string(m) + "x" +
                               std::to_string(k));
    }
  }

  mmimo::ComplexMatrix draw(const mmimo::Seed& seed, std::size_t m, std::size_t k, std::size_t trial) const {
    if (measured) {
      return set.matrices[trial].topLeftCorner(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
    }
    return mmimo::gen_iid_channel(seed, m, k);
  }
};

ChannelSource channel_source(const ExperimentConfig& cfg) {
  ChannelSource src;
  if (!cfg.channels.empty()) {
    src.measured = true;
    src.set = mmimo::load_measured_channels(cfg.channels);
  }
  return src;
}

ExperimentResult run_svd_spread(const ExperimentConfig& cfg, unsigned threads) {
  const auto root = root_seed(cfg, 2);
  const auto source = channel_source(cfg);
  const std::size_t k = to_size(cfg.get_unsigned("terminals"), "svd-spread.terminals");
  const std::size_t trials = source.trials(cfg.trials);

  ExperimentResult result;
  Table table{"svd_spread", "M,K,trial,spread_db", {}};
  json per_m = json::array();
  for (std::uint64_t m64 : cfg.get_unsigned_list("antennas")) {
    const std::size_t m = to_size(m64, "svd-spread.antennas");
    source.check(m, k);
    const auto spreads = mmimo::parallel_map(trials, threads, [&](std::size_t t) {
      return mmimo::singular_value_spread_db(source.draw(root.child({m64, t}), m, k, t));
    });
    for (std::size_t t = 0; t < trials; ++t) table.rows.push_back(row(m, k, t, spreads[t]));
    const mmimo::EmpiricalCdf cdf(spreads, "dB");
    per_m.push_back({{"M", m},
                     {"median_db", cdf.median()},
                     {"p10_db", cdf.quantile(0.1)},
                     {"p90_db", cdf.quantile(0.9)}});
  }
  result.metrics["channel_model"] = source.measured ? "measured" : "iid-rayleigh";
  result.metrics["trials_per_M"] = trials;
  result.metrics["spread"] = per_m;
  result.tables.push_back(std::move(table));
  return result;
}

ExperimentResult run_mrt_sumrate(const ExperimentConfig& cfg, unsigned threads) {
  const auto root = root_seed(cfg, 3);
  const auto source = channel_source(cfg);
  const std::size_t k = to_size(cfg.get_unsigned("terminals"), "mrt-sumrate.terminals");
  const double snr = mmimo::db_to_linear(cfg.get_real("reference_snr_db"));
  const std::size_t trials = source.trials(cfg.trials);

  ExperimentResult result;
  Table table{"mrt_sumrate", "M,K,realization,sum_rate_bps_hz", {}};
  json per_m = json::array();
  for (std::uint64_t m64 : cfg.get_unsigned_list("antennas")) {
    const std::size_t m = to_size(m64, "mrt-sumrate.antennas");
    source.check(m, k);
    const auto rates = mmimo::parallel_map(trials, threads, [&](std::size_t t) {
      const auto h = source.draw(root.child({m64, t}), m, k, t);
      const double power = mmimo::power_for_reference_snr(h, 1.0, snr);
      return mmimo::evaluate_downlink(h, mmimo::mrt_precoder(h, power), 1.0).sum_rate();
    });
    for (std::size_t t = 0; t < trials; ++t) table.rows.push_back(row(m, k, t, rates[t]));
    per_m.push_back({{"M", m}, {"mean_sum_rate_bps_hz", mmimo::mean(rates)}});
  }
  result.metrics["channel_model"] = source.measured ? "measured" : "iid-rayleigh";
  result.metrics["realizations_per_M"] = trials;
  result.metrics["interference_free_ceiling_bps_hz"] = static_cast<double>(k) * std::log2(1.0 + snr);
  result.metrics["sum_rate"] = per_m;
  result.tables.push_back(std::move(table));
  return result;
}

ExperimentResult run_focusing_map(const ExperimentConfig& cfg, unsigned threads) {
  if (!cfg.channels.empty()) throw mmimo::ConfigError("--channels applies to svd-spread and mrt-sumrate only");
  mmimo::FocusingSetup setup;
  setup.antennas = to_size(cfg.get_unsigned("antennas"), "focusing-map.antennas");
  setup.antenna_spacing = cfg.get_real("antenna_spacing");
  setup.scatterers = to_size(cfg.get_unsigned("scatterers"), "focusing-map.scatterers");
  const double size = cfg.get_real("region_size");
  setup.region = mmimo::Region{{0.0, 0.0}, size, size};
  setup.bs_distance = cfg.get_real("bs_distance");
  const double offset = cfg.get_real("user_offset");
  setup.users = {{0.0, 0.0}, {offset, 0.0}, {-offset, 0.0}, {0.0, offset}, {0.0, -offset}};
  setup.law = cfg.get_text("spreading") == "spherical" ? mmimo::SpreadingLaw::spherical
                                                       : mmimo::SpreadingLaw::cylindrical;
  mmimo::GridSpec grid;
  grid.half_width = cfg.get_real("grid_half_width");
  grid.step = cfg.get_real("grid_step");

  const auto root = root_seed(cfg, 1);
  ExperimentResult result;
  Table users{"focusing_users", "scheme,user,x_lambda,y_lambda,relative_db", {}};
  for (const auto& [label, scheme] : {std::pair{"mrt", mmimo::PrecodingScheme::mrt},
                                      std::pair{"zf", mmimo::PrecodingScheme::zf}}) {
    const auto map = mmimo::field_map(setup, scheme, grid, cfg.trials, root, threads);
    Table table{std::string("focusing_map_") + label, "x_lambda,y_lambda,avg_power_db", {}};
    const auto db = map.relative_db();
    for (std::size_t p = 0; p < map.points.size(); ++p) {
      table.rows.push_back(row(map.points[p].x, map.points[p].y, db[p]));
    }
    double worst_other = -std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < setup.users.size(); ++u) {
      const double rel = map.user_relative_db(u);
      users.rows.push_back(row(label, u, setup.users[u].x, setup.users[u].y, rel));
      if (u > 0) worst_other = std::max(worst_other, rel);
    }
    const double target = map.user_relative_db(0);
    result.metrics[label] = {{"target_relative_db", target},
                             {"strongest_other_user_relative_db", worst_other},
                             {"target_over_other_users_db", target - worst_other}};
    result.tables.push_back(std::move(table));
  }
  result.metrics["array_gain_db"] = 10.0 * std::log10(static_cast<double>(setup.antennas));
  result.metrics["grid_points"] = grid.side() * grid.side();
  result.tables.push_back(std::move(users));
  return result;
}

ExperimentResult run_ee_se(const ExperimentConfig& cfg, unsigned /*threads*/) {
  if (!cfg.channels.empty()) throw mmimo::ConfigError("--channels applies to svd-spread and mrt-sumrate only");
  const std::size_t m = to_size(cfg.get_unsigned("antennas"), "ee-se-tradeoff.antennas");
  const std::size_t k = to_size(cfg.get_unsigned("terminals"), "ee-se-tradeoff.terminals");
  mmimo::EeSeSweepConfig sweep;
  sweep.systems = {{"reference", 1, 1, mmimo::ReceiverScheme::mrc},
                   {"single-user-bf", m, 1, mmimo::ReceiverScheme::mrc},
                   {"massive-mrc", m, k, mmimo::ReceiverScheme::mrc},
                   {"massive-zf", m, k, mmimo::ReceiverScheme::zf}};
  sweep.coherence_length = to_size(cfg.get_unsigned("coherence_length"), "ee-se-tradeoff.coherence_length");
  sweep.beta = cfg.get_real("beta");
  const double lo = cfg.get_real("rho_min_db");
  const double hi = cfg.get_real("rho_max_db");
  const double step = cfg.get_real("rho_step_db");
  if (!(step > 0.0) || hi < lo) throw mmimo::ConfigError("ee-se-tradeoff: need rho_step_db > 0 and rho_max_db >= rho_min_db");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) sweep.rho_db.push_back(lo + static_cast<double>(i) * step);

  const auto sweep_result = mmimo::ee_se_sweep(sweep);
  ExperimentResult result;
  Table table{"ee_se", "system,M,K,rho_db,tau,se_bps_hz,ee_relative", {}};
  for (const auto& curve : sweep_result.curves) {
    for (const auto& p : curve.points) {
      table.rows.push_back(
          row(curve.system.name, curve.system.antennas, curve.system.terminals, p.rho_db, p.tau, p.se, p.ee_relative));
    }
  }
  const auto& peak = sweep_result.curves.front().points[sweep_result.reference_peak];
  result.metrics["reference_peak"] = {{"rho_db", peak.rho_db}, {"tau", peak.tau}, {"se_bps_hz", peak.se}};

  json headline = nullptr;
  std::size_t qualifying = 0;
  for (const auto& p : sweep_result.curves[2].points) {
    const double se_ratio = p.se / sweep_result.reference_se;
    if (se_ratio >= 10.0 && p.ee_relative >= 100.0) {
      ++qualifying;
      if (headline.is_null() || se_ratio > headline["se_ratio"].get<double>()) {
        headline = {{"rho_db", p.rho_db}, {"tau", p.tau}, {"se_ratio", se_ratio}, {"ee_ratio", p.ee_relative}};
      }
    }
  }
  result.metrics["massive_mrc_points_10x_se_100x_ee"] = qualifying;
  result.metrics["massive_mrc_headline_point"] = headline;
  result.tables.push_back(std::move(table));
  return result;
}

ExperimentResult run_pilot_contamination(const ExperimentConfig& cfg, unsigned threads) {
  if (!cfg.channels.empty()) throw mmimo::ConfigError("--channels applies to svd-spread and mrt-sumrate only");
  const double beta_home = cfg.get_real("beta_home");
  const auto contaminators = cfg.get_real_list("contaminating_betas");
  const double energy = mmimo::db_to_linear(cfg.get_real("pilot_snr_db"));
  const auto root = root_seed(cfg, 5);

  ExperimentResult result;
  Table table{"pilot_contamination", "M,desired_power,interference_power,sir_db", {}};
  std::vector<double> ms, desired, interference;
  double last_sir = 0.0;
  for (std::uint64_t m64 : cfg.get_unsigned_list("antennas")) {
    const std::size_t m = to_size(m64, "pilot-contamination.antennas");
    const auto s = mmimo::simulate_contamination(m, beta_home, contaminators, energy, cfg.trials, root.child(m64),
                                                 threads);
    table.rows.push_back(row(m, s.desired_power, s.interference_power, s.sir_db));
    ms.push_back(static_cast<double>(m));
    desired.push_back(s.desired_power);
    interference.push_back(s.interference_power);
    last_sir = s.sir_db;
  }
  result.metrics["sir_limit_db"] = number(mmimo::contamination_sir_limit_db(beta_home, contaminators));
  result.metrics["sir_db_at_largest_M"] = number(last_sir);
  if (ms.size() >= 2) {
    result.metrics["desired_loglog_slope"] = mmimo::loglog_slope(ms, desired);
    bool positive = true;
    for (double v : interference) positive = positive && v > 0.0;
    result.metrics["interference_loglog_slope"] = positive ? json(mmimo::loglog_slope(ms, interference)) : json(nullptr);
  }
  result.metrics["max_orthogonal_pilots"] =
      mmimo::max_orthogonal_pilots(cfg.get_real("coherence_s"), cfg.get_real("delay_spread_s"));

  Table reuse{"pilot_reuse", "reuse_factor,cells,pilot_groups,min_cochannel_distance", {}};
  const auto rings = static_cast<std::size_t>(cfg.get_unsigned("reuse_rings"));
  const double isd = cfg.get_real("inter_site_distance");
  for (int factor : {1, 3, 7}) {
    const auto grid = mmimo::make_hex_grid(rings, factor, isd);
    std::size_t groups = 0;
    for (const auto& c : grid.cells) groups = std::max(groups, c.pilot_group + 1);
    reuse.rows.push_back(row(factor, grid.cells.size(), groups, mmimo::min_cochannel_distance(grid)));
  }
  result.tables.push_back(std::move(table));
  result.tables.push_back(std::move(reuse));
  return result;
}

ExperimentResult run_rural(const ExperimentConfig& cfg, unsigned threads) {
  if (!cfg.channels.empty()) throw mmimo::ConfigError("--channels applies to svd-spread and mrt-sumrate only");
  mmimo::RuralScenario s;
  s.antennas = to_size(cfg.get_unsigned("antennas"), "rural-broadband.antennas");
  s.terminals = to_size(cfg.get_unsigned("terminals"), "rural-broadband.terminals");
  s.total_power_w = cfg.get_real("total_power_w");
  s.bandwidth_hz = cfg.get_real("bandwidth_hz");
  s.carrier_hz = cfg.get_real("carrier_hz");
  s.radius_km = cfg.get_real("radius_km");
  s.exclusion_km = cfg.get_real("exclusion_km");
  s.heights = {cfg.get_real("base_height_m"), cfg.get_real("terminal_height_m")};
  s.noise_figure_db = cfg.get_real("noise_figure_db");
  s.terminal_gain_db = cfg.get_real("terminal_gain_db");
  s.base_gain_db = cfg.get_real("base_gain_db");
  s.shadow_sigma_db = cfg.get_real("shadow_sigma_db");
  s.pilot_fraction = cfg.get_real("pilot_fraction");
  s.drop_fraction = cfg.get_real("drop_fraction");
  s.pilot_power_w = cfg.get_real("pilot_power_w");
  s.coherence_time_s = cfg.get_real("coherence_time_s");
  s.coherence_bandwidth_hz = cfg.get_real("coherence_bandwidth_hz");

  const auto rural = mmimo::rural_broadband(s, root_seed(cfg, 6), cfg.trials, threads, cfg.get_bool("allow_override"));
  ExperimentResult result;
  Table table{"rural",
              "drop,served,common_sinr,throughput_mbps,throughput_mbps_perfect_csi,sum_throughput_gbps",
              {}};
  std::size_t served_min = std::numeric_limits<std::size_t>::max();
  std::size_t served_max = 0;
  for (std::size_t d = 0; d < rural.drops.size(); ++d) {
    const auto& r = rural.drops[d];
    table.rows.push_back(
        row(d, r.served, r.common_sinr, r.throughput_mbps, r.throughput_mbps_perfect_csi, r.sum_throughput_gbps));
    served_min = std::min(served_min, r.served);
    served_max = std::max(served_max, r.served);
  }
  result.metrics["drops"] = rural.drops.size();
  result.metrics["served_per_drop_min"] = served_min;
  result.metrics["served_per_drop_max"] = served_max;
  result.metrics["throughput_mbps_mean"] = rural.mean_throughput_mbps;
  result.metrics["throughput_mbps_p5"] = rural.p5_throughput_mbps;
  result.metrics["throughput_mbps_perfect_csi_mean"] = rural.mean_throughput_mbps_perfect_csi;
  result.metrics["sum_throughput_gbps_mean"] = rural.mean_sum_throughput_gbps;
  result.metrics["sum_spectral_efficiency_bps_hz"] = rural.sum_spectral_efficiency;
  result.metrics["noise_dbm"] = s.noise_dbm();
  result.metrics["rho_dl_db"] = mmimo::linear_to_db(s.rho_dl());
  result.metrics["rho_pilot_db"] = mmimo::linear_to_db(s.rho_pilot());
  result.metrics["coherence_symbols"] = s.coherence_symbols();
  result.metrics["pilot_length"] = s.pilot_length();
  result.tables.push_back(std::move(table));
  return result;
}

}  // namespace

std::string Table::csv() const {
  std::string out = header + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

const Table& ExperimentResult::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw mmimo::ConfigError("no table named " + name);
}

const char* version() { return MMSIM_VERSION; }

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads) {
  const std::string& e = config.experiment;
  if (e == "svd-spread") return run_svd_spread(config, threads);
  if (e == "mrt-sumrate") return run_mrt_sumrate(config, threads);
  if (e == "focusing-map") return run_focusing_map(config, threads);
  if (e == "ee-se-tradeoff") return run_ee_se(config, threads);
  if (e == "pilot-contamination") return run_pilot_contamination(config, threads);
  if (e == "rural-broadband") return run_rural(config, threads);
  throw mmimo::ConfigError("unknown experiment " + e);
}

nlohmann::ordered_json summary_json(const ExperimentConfig& config, const ExperimentResult& result) {
  json resolved = json::object();
  resolved["experiment"] = config.experiment;
  resolved["seed"] = config.seed;
  resolved["trials"] = config.trials;
  resolved["profile"] = config.profile;
  resolved["channels"] = config.channels;
  resolved["output_dir"] = config.output_dir;
  json params = json::object();
  for (const auto& [k, v] : config.params) params[k] = v;
  resolved[config.experiment] = params;

  json doc = json::object();
  doc["experiment"] = config.experiment;
  doc["version"] = version();
  doc["seed"] = config.seed;
  doc["config_hash"] = config.hash();
  doc["config"] = resolved;
  doc["metrics"] = result.metrics;
  json tables = json::array();
  for (const auto& t : result.tables) tables.push_back(t.name + ".csv");
  doc["tables"] = tables;
  return doc;
}

void emit_tables(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw mmimo::IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw mmimo::IoError("cannot write " + path.string());
  };
  for (const auto& t : result.tables) write(dir / (t.name + ".csv"), t.csv());
  write(dir / "summary.json", summary_json(config, result).dump(2) + "\n");
}

}  // namespace mmsim
