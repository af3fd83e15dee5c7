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
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "mmimo/linalg.hpp"

namespace mmimo {

/// Narrowband channel snapshots at F frequency points, each M×K.
struct MeasuredChannelSet {
  std::size_t antennas = 0;
  std::size_t terminals = 0;
  std::vector<ComplexMatrix> matrices;

  std::size_t frequency_points() const noexcept { return matrices.size(); }
};

// CFCSV v1:
//   line 1:  M,K,F
//   then F blocks of M lines; each line holds 2K comma-separated decimals,
//   re,im interleaved for terminals 1..K. LF line endings.
// Parse failures throw ParseError with the 1-based line number.

MeasuredChannelSet parse_measured_channels(std::istream& in);
MeasuredChannelSet load_measured_channels(const std::filesystem::path& path);

/// Writes CFCSV v1 using shortest round-trip formatting, so a reload is
/// bit-exact.
void write_measured_channels(std::ostream& out, const MeasuredChannelSet& set);
void save_measured_channels(const std::filesystem::path& path, const MeasuredChannelSet& set);

}  // namespace mmimo
