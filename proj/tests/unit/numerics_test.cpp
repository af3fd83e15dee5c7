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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mmimo/error.hpp"
#include "mmimo/format.hpp"
#include "mmimo/linalg.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/random.hpp"
#include "mmimo/stats.hpp"
#include "oracles.hpp"

using namespace mmimo;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Seed, SameSeedGivesSameSequence) {
  RandomStream a(Seed(42, {1, 2}));
  RandomStream b(Seed(42, {1, 2}));
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Seed, ChildMatchesExplicitPath) {
  EXPECT_EQ(Seed(9).child(3).child(4), Seed(9, {3, 4}));
  EXPECT_EQ(Seed(9).child({3, 4}), Seed(9, {3, 4}));
}

TEST(Seed, DistinctPathsGiveDistinctStreams) {
  EXPECT_NE(RandomStream(Seed(1, {0})).next_u64(), RandomStream(Seed(1, {1})).next_u64());
  EXPECT_NE(RandomStream(Seed(1, {0})).next_u64(), RandomStream(Seed(2, {0})).next_u64());
  EXPECT_NE(RandomStream(Seed(1, {0, 1})).key(), RandomStream(Seed(1, {1, 0})).key());
}

TEST(RandomStream, UniformStaysInRange) {
  RandomStream s(Seed(5));
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    const double v = s.uniform_positive();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(RandomStream, NormalMoments) {
  RandomStream s(Seed(11));
  std::vector<double> x(200000);
  for (double& v : x) v = s.normal();
  EXPECT_NEAR(mean(x), 0.0, 0.01);
  EXPECT_NEAR(variance(x), 1.0, 0.01);
  EXPECT_NEAR(kurtosis(x), 3.0, 0.05);
}

TEST(DrawComplexGaussian, Deterministic) {
  const auto a = draw_complex_gaussian(Seed(3, {7}), 5, 4);
  const auto b = draw_complex_gaussian(Seed(3, {7}), 5, 4);
  EXPECT_TRUE(a == b);
}

TEST(DrawComplexGaussian, DistinctStreamsDiffer) {
  const auto a = draw_complex_gaussian(Seed(3, {7}), 5, 4);
  const auto b = draw_complex_gaussian(Seed(3, {8}), 5, 4);
  EXPECT_FALSE(a == b);
}

TEST(DrawComplexGaussian, ZeroDimensionThrows) {
  EXPECT_THROW(draw_complex_gaussian(Seed(1), 0, 3), DimensionError);
  EXPECT_THROW(draw_complex_gaussian(Seed(1), 3, 0), DimensionError);
}

TEST(DrawComplexGaussian, UnitPowerOverMillionEntries) {
  const auto h = draw_complex_gaussian(Seed(2024), 1000, 1000);
  const double power = h.squaredNorm() / static_cast<double>(h.size());
  EXPECT_NEAR(power, 1.0, 0.01);
  double re2 = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) re2 += h.data()[i].real() * h.data()[i].real();
  EXPECT_NEAR(re2 / static_cast<double>(h.size()), 0.5, 0.005);
}

TEST(SingularValues, Identity) {
  const auto sv = singular_values(ComplexMatrix::Identity(2, 2));
  ASSERT_EQ(sv.size(), 2u);
  EXPECT_NEAR(sv[0], 1.0, 1e-15);
  EXPECT_NEAR(sv[1], 1.0, 1e-15);
}

TEST(SingularValues, DiagonalDescending) {
  const auto sv = singular_values(diag2(1.0, 3.0));
  EXPECT_NEAR(sv[0], 3.0, 1e-14);
  EXPECT_NEAR(sv[1], 1.0, 1e-14);
}

TEST(SingularValues, MatchesGramEigenOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto h = oracle::gaussian_matrix(6, 3, seed);
    const auto sv = singular_values(h);
    const auto ref = oracle::singular_values(h);
    ASSERT_EQ(sv.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(sv[i], ref[i], 1e-9 * ref[i]) << "seed " << seed;
  }
}

TEST(SingularValues, FrobeniusConsistency) {
  for (auto [r, c] : {std::pair{4, 4}, std::pair{32, 4}, std::pair{3, 9}, std::pair{128, 4}}) {
    const auto h = draw_complex_gaussian(Seed(77, {static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)}),
                                         static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    const auto sv = singular_values(h);
    EXPECT_EQ(sv.size(), static_cast<std::size_t>(std::min(r, c)));
    double s2 = 0.0;
    for (double s : sv) s2 += s * s;
    EXPECT_NEAR(s2, h.squaredNorm(), 1e-9 * h.squaredNorm());
    EXPECT_TRUE(std::is_sorted(sv.rbegin(), sv.rend()));
  }
}

TEST(SingularValues, NonFiniteThrows) {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  h(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(singular_values(h), NumericError);
  h(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(singular_values(h), NumericError);
}

TEST(SpreadDb, IdentityAndDiagonal) {
  EXPECT_NEAR(singular_value_spread_db(ComplexMatrix::Identity(3, 3)), 0.0, 1e-12);
  EXPECT_NEAR(singular_value_spread_db(diag2(10.0, 1.0)), 20.0, 1e-12);
}

TEST(SpreadDb, RankDeficientThrows) {
  EXPECT_THROW(singular_value_spread_db(diag2(1.0, 0.0)), RankError);
  ComplexMatrix h(3, 2);
  h.col(0) << 1.0, 2.0, 3.0;
  h.col(1) = 2.0 * h.col(0);
  EXPECT_THROW(singular_value_spread_db(h), RankError);
}

TEST(SpreadDb, ScaleInvariant) {
  const Complex scalars[] = {{2.5, 0.0}, {0.0, -3.0}, {1e-3, 4e-3}, {-7.0, 1.0}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = draw_complex_gaussian(Seed(99, {seed}), 8, 4);
    const double base = singular_value_spread_db(h);
    for (const auto& c : scalars) {
      const ComplexMatrix scaled = c * h;
      EXPECT_NEAR(singular_value_spread_db(scaled), base, 1e-12);
    }
  }
}

TEST(SpreadDb, SquareEnsembleMedianMatchesIndependentEnsemble) {
  std::vector<double> ours, theirs;
  for (std::uint64_t t = 0; t < 4000; ++t) {
    ours.push_back(singular_value_spread_db(draw_complex_gaussian(Seed(5, {t}), 4, 4)));
    const auto sv = oracle::singular_values(oracle::gaussian_matrix(4, 4, 100000 + t));
    theirs.push_back(20.0 * std::log10(sv.front() / sv.back()));
  }
  EXPECT_NEAR(EmpiricalCdf(ours, "dB").median(), EmpiricalCdf(theirs, "dB").median(), 0.6);
}

TEST(PseudoInverse, Identity) {
  EXPECT_TRUE(pseudo_inverse(ComplexMatrix::Identity(3, 3)).isApprox(ComplexMatrix::Identity(3, 3), 1e-14));
}

TEST(PseudoInverse, TallColumnOfOnes) {
  ComplexMatrix h(2, 1);
  h << 1.0, 1.0;
  const auto p = pseudo_inverse(h);
  ASSERT_EQ(p.rows(), 1);
  ASSERT_EQ(p.cols(), 2);
  EXPECT_NEAR(std::abs(p(0, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p(0, 1) - 0.5), 0.0, 1e-15);
}

TEST(PseudoInverse, LeftInverseResidual) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = draw_complex_gaussian(Seed(8, {seed}), 8, 3);
    const ComplexMatrix residual = pseudo_inverse(h) * h - ComplexMatrix::Identity(3, 3);
    EXPECT_LT(residual.norm(), 1e-9);
  }
}

TEST(PseudoInverse, EqualsNormalEquationSolution) {
  // For full column rank the minimal-norm least-squares inverse is (HᴴH)⁻¹Hᴴ.
  const auto h = oracle::gaussian_matrix(10, 4, 31);
  const ComplexMatrix normal = (h.adjoint() * h).inverse() * h.adjoint();
  EXPECT_LT((pseudo_inverse(h) - normal).norm(), 1e-10);
}

TEST(PseudoInverse, RankDeficientThrows) {
  EXPECT_THROW(pseudo_inverse(diag2(1.0, 0.0)), RankError);
  EXPECT_THROW(pseudo_inverse(ComplexMatrix::Ones(2, 3)), RankError);
}

TEST(CompensatedSum, RecoversSmallTerms) {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value(), 1000.0);
}

TEST(Stats, MeanVarianceKurtosis) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  EXPECT_DOUBLE_EQ(mean(x), 2.5);
  EXPECT_DOUBLE_EQ(variance(x), 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(standard_deviation(x), std::sqrt(5.0 / 3.0));
  EXPECT_EQ(variance(std::vector<double>{7.0}), 0.0);
  // Two-point symmetric distribution has kurtosis exactly 1.
  EXPECT_DOUBLE_EQ(kurtosis(std::vector<double>{-1.0, 1.0, -1.0, 1.0}), 1.0);
  EXPECT_THROW(kurtosis(std::vector<double>{2.0, 2.0}), DomainError);
}

TEST(Stats, LogLogSlopeOfPowerLaw) {
  std::vector<double> x, y;
  for (double v : {16.0, 64.0, 256.0, 1024.0}) {
    x.push_back(v);
    y.push_back(3.0 * std::pow(v, 1.5));
  }
  EXPECT_NEAR(loglog_slope(x, y), 1.5, 1e-12);
  EXPECT_THROW(loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), DimensionError);
  EXPECT_THROW(loglog_slope(std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 1.0}), DomainError);
}

TEST(EmpiricalCdf, QuantilesAndOrdering) {
  const EmpiricalCdf cdf({5.0, 1.0, 3.0, 2.0, 4.0}, "dB");
  EXPECT_TRUE(std::is_sorted(cdf.sorted_values().begin(), cdf.sorted_values().end()));
  EXPECT_EQ(cdf.unit(), "dB");
  EXPECT_DOUBLE_EQ(cdf.median(), 3.0);
  EXPECT_DOUBLE_EQ(cdf.quantile(0.0), 1.0);
  EXPECT_DOUBLE_EQ(cdf.quantile(1.0), 5.0);
  EXPECT_DOUBLE_EQ(cdf.quantile(0.1), 1.4);
  EXPECT_DOUBLE_EQ(cdf.cdf(3.0), 0.6);
  EXPECT_DOUBLE_EQ(EmpiricalCdf({1.0, 2.0, 3.0, 4.0}, "").median(), 2.5);
  EXPECT_THROW(cdf.quantile(1.5), DomainError);
  EXPECT_THROW(EmpiricalCdf({}, "").median(), DomainError);
}

TEST(Decibels, RoundTrip) {
  EXPECT_DOUBLE_EQ(db_to_linear(20.0), 100.0);
  EXPECT_DOUBLE_EQ(linear_to_db(1000.0), 30.0);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-30.0), "-30");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(ParallelMap, ResultsIndependentOfThreadCount) {
  auto work = [](std::size_t i) {
    RandomStream s(Seed(1, {i}));
    double acc = 0.0;
    for (int k = 0; k < 100; ++k) acc += s.normal();
    return acc;
  };
  const auto one = parallel_map(257, 1, work);
  const auto many = parallel_map(257, 7, work);
  EXPECT_EQ(one, many);
}

TEST(ParallelMap, PropagatesExceptions) {
  auto work = [](std::size_t i) -> int {
    if (i == 13) throw DomainError("boom");
    return static_cast<int>(i);
  };
  EXPECT_THROW(parallel_map(50, 4, work), DomainError);
}
