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

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace mmimo {

/// Neumaier-compensated accumulator. Results depend only on the order of
/// `add` calls, never on how the caller was scheduled.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double sum(std::span<const double> values);
double mean(std::span<const double> values);
/// Unbiased sample variance; zero for fewer than two values.
double variance(std::span<const double> values);
double standard_deviation(std::span<const double> values);
/// Non-excess kurtosis m4/m2² (3 for a Gaussian).
double kurtosis(std::span<const double> values);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

class EmpiricalCdf {
 public:
  EmpiricalCdf() = default;
  EmpiricalCdf(std::vector<double> values, std::string unit);

  /// Linear interpolation between order statistics (Hyndman-Fan type 7),
  /// so quantile(0.5) is the sample median.
  double quantile(double p) const;
  double median() const { return quantile(0.5); }
  /// Fraction of samples <= x.
  double cdf(double x) const;

  const std::vector<double>& sorted_values() const noexcept { return sorted_; }
  const std::string& unit() const noexcept { return unit_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
  std::string unit_;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace mmimo
