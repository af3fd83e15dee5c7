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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mmimo {

/// Hierarchical seed. Identical (master, stream_path) pairs produce identical
/// streams; each distinct path keys an independent counter-based stream, so
/// trials can be evaluated in any order or on any thread.
struct Seed {
  std::uint64_t master = 0;
  std::vector<std::uint64_t> stream_path;

  Seed() = default;
  explicit Seed(std::uint64_t master_seed) : master(master_seed) {}
  Seed(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path)
      : master(master_seed), stream_path(path) {}

  /// Seed of the sub-stream `index` below this one.
  Seed child(std::uint64_t index) const;
  Seed child(std::initializer_list<std::uint64_t> indices) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Counter-based generator: output n is a keyed bijective mix of n.
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(const Seed& seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1]; safe as a logarithm argument.
  double uniform_positive();
  /// Standard normal N(0, 1).
  double normal();
  /// Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_normal();

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer; exposed for seed hashing in the experiment layer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace mmimo
