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

#include "mmimo/measured.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "mmimo/error.hpp"
#include "mmimo/format.hpp"

namespace mmimo {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("CFCSV line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* name) {
  token = trim(token);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    fail(line, std::string("header field ") + name + " is not a non-negative integer: '" + std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token, std::size_t line, std::size_t column) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    fail(line, "field " + std::to_string(column) + " is not numeric: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    fail(line, "field " + std::to_string(column) + " is not finite");
  }
  return value;
}

}  // namespace

MeasuredChannelSet parse_measured_channels(std::istream& in) {
  std::string text;
  std::size_t line_no = 1;
  if (!std::getline(in, text)) fail(1, "missing header 'M,K,F'");
  const auto header = split_commas(trim(text));
  if (header.size() != 3) fail(1, "header must be 'M,K,F', found " + std::to_string(header.size()) + " fields");

  MeasuredChannelSet set;
  set.antennas = parse_count(header[0], 1, "M");
  set.terminals = parse_count(header[1], 1, "K");
  const std::size_t freq = parse_count(header[2], 1, "F");
  if (set.antennas == 0 || set.terminals == 0 || freq == 0) fail(1, "M, K and F must all be at least 1");

  const std::size_t expected_rows = set.antennas * freq;
  const std::size_t expected_fields = 2 * set.terminals;
  set.matrices.reserve(freq);

  std::size_t rows_read = 0;
  ComplexMatrix current(static_cast<Eigen::Index>(set.antennas), static_cast<Eigen::Index>(set.terminals));
  while (std::getline(in, text)) {
    ++line_no;
    const auto body = trim(text);
    if (body.empty()) {
      // Only trailing blank lines are tolerated.
      std::string rest;
      while (std::getline(in, rest)) {
        ++line_no;
        if (!trim(rest).empty()) fail(line_no, "data after blank line");
      }
      break;
    }
    if (rows_read == expected_rows) {
      fail(line_no, "expected " + std::to_string(expected_rows) + " data rows, found more");
    }
    const auto fields = split_commas(body);
    if (fields.size() != expected_fields) {
      fail(line_no, "expected " + std::to_string(expected_fields) + " fields, found " + std::to_string(fields.size()));
    }
    const auto m = static_cast<Eigen::Index>(rows_read % set.antennas);
    for (std::size_t k = 0; k < set.terminals; ++k) {
      const double re = parse_real(fields[2 * k], line_no, 2 * k + 1);
      const double im = parse_real(fields[2 * k + 1], line_no, 2 * k + 2);
      current(m, static_cast<Eigen::Index>(k)) = Complex{re, im};
    }
    ++rows_read;
    if (rows_read % set.antennas == 0) set.matrices.push_back(current);
  }
  if (rows_read != expected_rows) {
    fail(line_no, "expected " + std::to_string(expected_rows) + " data rows (M*F), found " + std::to_string(rows_read));
  }
  return set;
}

MeasuredChannelSet load_measured_channels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open measured-channel file " + path.string());
  return parse_measured_channels(in);
}

void write_measured_channels(std::ostream& out, const MeasuredChannelSet& set) {
  out << set.antennas << ',' << set.terminals << ',' << set.matrices.size() << '\n';
  for (const auto& h : set.matrices) {
    if (static_cast<std::size_t>(h.rows()) != set.antennas || static_cast<std::size_t>(h.cols()) != set.terminals) {
      throw DimensionError("write_measured_channels: matrix shape does not match header");
    }
    for (Eigen::Index m = 0; m < h.rows(); ++m) {
      for (Eigen::Index k = 0; k < h.cols(); ++k) {
        if (k > 0) out << ',';
        out << format_double(h(m, k).real()) << ',' << format_double(h(m, k).imag());
      }
      out << '\n';
    }
  }
}

void save_measured_channels(const std::filesystem::path& path, const MeasuredChannelSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write measured-channel file " + path.string());
  write_measured_channels(out, set);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace mmimo
