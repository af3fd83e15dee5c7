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

#include "mmimo/stats.hpp"

#include <algorithm>
#include <cmath>

#include "mmimo/error.hpp"

namespace mmimo {

void CompensatedSum::add(double value) noexcept {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

double sum(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

double mean(std::span<const double> values) {
  if (values.empty()) {
    throw DomainError("mean: empty sample");
  }
  return sum(values) / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  CompensatedSum acc;
  for (double v : values) acc.add((v - m) * (v - m));
  return acc.value() / static_cast<double>(values.size() - 1);
}

double standard_deviation(std::span<const double> values) { return std::sqrt(variance(values)); }

double kurtosis(std::span<const double> values) {
  const double m = mean(values);
  CompensatedSum m2, m4;
  for (double v : values) {
    const double d2 = (v - m) * (v - m);
    m2.add(d2);
    m4.add(d2 * d2);
  }
  const double n = static_cast<double>(values.size());
  const double var = m2.value() / n;
  if (!(var > 0.0)) {
    throw DomainError("kurtosis: zero variance");
  }
  return (m4.value() / n) / (var * var);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DimensionError("loglog_slope: need at least two paired samples");
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw DomainError("loglog_slope: samples must be positive");
    }
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double mx = mean(lx);
  const double my = mean(ly);
  CompensatedSum sxy, sxx;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy.add((lx[i] - mx) * (ly[i] - my));
    sxx.add((lx[i] - mx) * (lx[i] - mx));
  }
  return sxy.value() / sxx.value();
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values, std::string unit)
    : sorted_(std::move(values)), unit_(std::move(unit)) {
  if (std::any_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isnan(v); })) {
    throw NumericError("EmpiricalCdf: NaN sample");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::quantile(double p) const {
  if (sorted_.empty()) {
    throw DomainError("EmpiricalCdf::quantile: empty sample");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("EmpiricalCdf::quantile: probability outside [0, 1]");
  }
  const double h = p * static_cast<double>(sorted_.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted_.size() - 1);
  return sorted_[lo] + (h - static_cast<double>(lo)) * (sorted_[hi] - sorted_[lo]);
}

double EmpiricalCdf::cdf(double x) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

}  // namespace mmimo
