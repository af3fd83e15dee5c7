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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oracle {

std::vector<double> hermitian_eigenvalues(const mmimo::ComplexMatrix& a) {
  const auto n = static_cast<int>(a.rows());
  const int m = 2 * n;
  // [Re -Im; Im Re] is real symmetric with each eigenvalue of A twice.
  std::vector<double> s(static_cast<std::size_t>(m * m));
  auto at = [&](int i, int j) -> double& { return s[static_cast<std::size_t>(i * m + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto z = a(i, j);
      at(i, j) = z.real();
      at(i + n, j + n) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        total += at(i, j) * at(i, j);
        if (i != j) off += at(i, j) * at(i, j);
      }
    }
    if (off <= 1e-30 * total) break;
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag;
  for (int i = 0; i < m; ++i) diag.push_back(at(i, i));
  std::sort(diag.begin(), diag.end(), std::greater<>());
  std::vector<double> out;
  for (int i = 0; i < m; i += 2) out.push_back(diag[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<double> singular_values(const mmimo::ComplexMatrix& h) {
  const mmimo::ComplexMatrix gram = h.rows() >= h.cols() ? mmimo::ComplexMatrix(h.adjoint() * h)
                                                         : mmimo::ComplexMatrix(h * h.adjoint());
  auto eig = hermitian_eigenvalues(gram);
  for (double& v : eig) v = std::sqrt(std::max(v, 0.0));
  return eig;
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

double expected_log2_exponential(double a) {
  // Split at x = 40 where e^{-x} is already below 1e-17 of the mass.
  auto f = [a](double x) { return std::log2(1.0 + a * x) * std::exp(-x); };
  return simpson(f, 0.0, 2.0, 20000) + simpson(f, 2.0, 80.0, 80000);
}

double maxmin_sinr_bisection(const std::vector<double>& betas, const std::vector<double>& gammas,
                             std::size_t antennas, double rho, std::vector<double>* etas) {
  const double m = static_cast<double>(antennas);
  const std::size_t k = betas.size();
  // Powers meeting SINR target t for everyone, or empty if Ση would exceed 1.
  auto powers_for = [&](double t) {
    std::vector<double> eta(k, 0.0);
    for (int it = 0; it < 100000; ++it) {
      double total = 0.0;
      for (double e : eta) total += e;
      std::vector<double> next(k);
      double next_total = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        next[i] = t * (1.0 + rho * betas[i] * total) / (rho * m * gammas[i]);
        next_total += next[i];
      }
      eta = next;
      if (next_total > 1.0 + 1e-15) return std::vector<double>{};
      if (std::abs(next_total - total) <= 1e-16 * next_total) break;
    }
    return eta;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (!powers_for(hi).empty()) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (powers_for(mid).empty()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (etas != nullptr) *etas = powers_for(lo);
  return lo;
}

mmimo::ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  mmimo::ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      out(i, j) = {re, im};
    }
  }
  return out;
}

std::vector<double> uplink_monte_carlo(const UplinkScenario& s, std::size_t draws, std::uint64_t seed) {
  const std::size_t k = s.betas.size();
  const auto m = static_cast<Eigen::Index>(s.antennas);
  const double energy = s.rho_pilot * static_cast<double>(s.tau);
  std::vector<double> gamma(k);
  double error_power = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    gamma[i] = energy * s.betas[i] * s.betas[i] / (1.0 + energy * s.betas[i]);
    error_power += s.betas[i] - gamma[i];
  }
  std::vector<double> acc(k, 0.0);
  for (std::size_t d = 0; d < draws; ++d) {
    const auto g = gaussian_matrix(s.antennas, k, seed * 1000003 + 2 * d);
    const auto n = gaussian_matrix(s.antennas, k, seed * 1000003 + 2 * d + 1);
    mmimo::ComplexMatrix est(m, static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) {
      const auto col = static_cast<Eigen::Index>(i);
      // Pilot observation y = sqrt(ρ_p τ)·g + n, MMSE-scaled.
      const mmimo::ComplexVector truth = std::sqrt(s.betas[i]) * g.col(col);
      const mmimo::ComplexVector y = std::sqrt(energy) * truth + n.col(col);
      est.col(col) = (std::sqrt(energy) * s.betas[i] / (1.0 + energy * s.betas[i])) * y;
    }
    if (!s.zero_forcing) {
      const mmimo::ComplexMatrix cross = est.adjoint() * est;
      for (std::size_t i = 0; i < k; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const double norm2 = cross(ii, ii).real();
        double interference = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j != i) interference += std::norm(cross(ii, static_cast<Eigen::Index>(j)));
        }
        const double sinr =
            s.rho * norm2 * norm2 / (s.rho * interference + norm2 * (1.0 + s.rho * error_power));
        acc[i] += std::log2(1.0 + sinr);
      }
    } else {
      const mmimo::ComplexMatrix inv = (est.adjoint() * est).inverse();
      for (std::size_t i = 0; i < k; ++i) {
        const double diag = inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
        acc[i] += std::log2(1.0 + s.rho / (diag * (1.0 + s.rho * error_power)));
      }
    }
  }
  const double prefactor = 1.0 - static_cast<double>(s.tau) / static_cast<double>(s.coherence);
  for (double& v : acc) v = prefactor * v / static_cast<double>(draws);
  return acc;
}

std::vector<double> downlink_mrt_monte_carlo(std::size_t antennas, const std::vector<double>& betas,
                                             const std::vector<double>& gammas, const std::vector<double>& etas,
                                             double rho, std::size_t draws, std::uint64_t seed) {
  const std::size_t k = betas.size();
  const double m = static_cast<double>(antennas);
  std::vector<double> acc(k, 0.0);
  for (std::size_t d = 0; d < draws; ++d) {
    const auto a = gaussian_matrix(antennas, k, seed * 1000003 + 2 * d);
    const auto b = gaussian_matrix(antennas, k, seed * 1000003 + 2 * d + 1);
    mmimo::ComplexMatrix h(a.rows(), a.cols());
    mmimo::ComplexMatrix w(a.rows(), a.cols());
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<Eigen::Index>(i);
      // True channel = estimate + independent error of variance β - γ.
      const mmimo::ComplexVector est = std::sqrt(gammas[i]) * a.col(c);
      h.col(c) = est + std::sqrt(betas[i] - gammas[i]) * b.col(c);
      w.col(c) = std::sqrt(rho * etas[i] / (m * gammas[i])) * est.conjugate();
    }
    const mmimo::ComplexMatrix gains = h.transpose() * w;
    for (std::size_t i = 0; i < k; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      double interference = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) interference += std::norm(gains(ii, static_cast<Eigen::Index>(j)));
      }
      acc[i] += std::log2(1.0 + std::norm(gains(ii, ii)) / (interference + 1.0));
    }
  }
  for (double& v : acc) v /= static_cast<double>(draws);
  return acc;
}

}  // namespace oracle
