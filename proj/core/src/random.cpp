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

#include "mmimo/random.hpp"

#include <cmath>
#include <numbers>

namespace mmimo {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kMasterSalt = 0x6a09e667f3bcc909ULL;
constexpr std::uint64_t kPathSalt = 0xbb67ae8584caa73bULL;

std::uint64_t derive_key(const Seed& seed) {
  std::uint64_t key = mix64(seed.master ^ kMasterSalt);
  // Path length is folded in so that {} and {0} differ.
  key = mix64(key + seed.stream_path.size() * kGolden);
  for (std::uint64_t part : seed.stream_path) {
    key = mix64(key ^ mix64(part + kPathSalt));
  }
  return key;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Seed Seed::child(std::uint64_t index) const {
  Seed out = *this;
  out.stream_path.push_back(index);
  return out;
}

Seed Seed::child(std::initializer_list<std::uint64_t> indices) const {
  Seed out = *this;
  out.stream_path.insert(out.stream_path.end(), indices.begin(), indices.end());
  return out;
}

RandomStream::RandomStream(const Seed& seed) : key_(derive_key(seed)) {}

std::uint64_t RandomStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_positive() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::normal() {
  const double radius = std::sqrt(-2.0 * std::log(uniform_positive()));
  return radius * std::cos(2.0 * std::numbers::pi * uniform());
}

std::complex<double> RandomStream::complex_normal() {
  // |z|^2 ~ Exp(1), phase uniform.
  const double radius = std::sqrt(-std::log(uniform_positive()));
  const double phase = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(phase), radius * std::sin(phase)};
}

}  // namespace mmimo
