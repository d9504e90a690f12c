// Copyright 2026 The logicint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logicint/errors.hpp"
#include "logicint/ising_transfer.hpp"
#include "logicint/span_analysis.hpp"
#include "printed.hpp"

using namespace logicint;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

int spin_of(Eigen::Index x, std::size_t site, std::size_t n) { return ((x >> (n - 1 - site)) & 1) ? -1 : 1; }

}  // namespace

TEST_CASE("transfer_matrix: reproduces the printed two-site matrix") {
  for (double gamma : {0.0, 0.3}) {
    const auto t = transfer_matrix({2, Complex(0.0, -kPi / 4.0), Complex(0.0, gamma)});
    CHECK((2.0 * t.matrix - printed::two_site_transfer(gamma)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // The other sign is also unitary but conjugates the phase pattern.
  const auto plus = transfer_matrix(unitary_couplings(2, 0.0, +1));
  CHECK((2.0 * plus.matrix - printed::phase_pattern().conjugate()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transfer_matrix: zero and real couplings") {
  for (std::size_t n : {2U, 3U, 4U}) {
    const auto t = transfer_matrix({n, 0.0, 0.0}).matrix;
    CHECK((t.array() - std::pow(2.0, -0.5 * static_cast<double>(n))).abs().maxCoeff() < 1e-15);
    const auto r = transfer_matrix({n, 0.35, -0.8}).matrix;
    CHECK(r.imag().isZero());
    CHECK(r.real().minCoeff() > 0.0);
  }
  CHECK_THROWS_AS(transfer_matrix({1, 0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(transfer_matrix({13, 0.0, 0.0}), SizeLimitError);
}

TEST_CASE("transfer_matrix: symmetric time factor times diagonal space factor") {
  for (std::size_t n : {2U, 3U, 4U}) {
    const IsingCouplings c{n, Complex(0.2, -0.7), Complex(-0.4, 1.1)};
    const auto t = transfer_matrix(c).matrix;
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix s(dim, dim);
    Eigen::VectorXcd d(dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      int space = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) space += spin_of(col, i, n) * spin_of(col, i + 1, n);
      d(col) = std::exp(-c.coupling_space * static_cast<double>(space));
      for (Eigen::Index row = 0; row < dim; ++row) {
        int time = 0;
        for (std::size_t i = 0; i < n; ++i) time += spin_of(row, i, n) * spin_of(col, i, n);
        s(row, col) = std::pow(2.0, -0.5 * static_cast<double>(n)) * std::exp(-c.coupling_time * static_cast<double>(time));
      }
    }
    CHECK(s == s.transpose());
    CHECK((t - s * d.asDiagonal()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("unitarity_defect: on the locus") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int sign : {-1, +1}) {
      for (double gamma : {0.0, 0.7, 2.1}) {
        CHECK(unitarity_defect(unitary_couplings(n, gamma, sign)) < 1e-12);
      }
    }
  }
  CHECK(unitarity_defect(IsingCouplings{3, Complex(0.0, kPi / 3.0), Complex(0.0, 0.5)}) > 0.1);
}

TEST_CASE("unitarity_defect: the locus is isolated") {
  for (std::size_t n : {2U, 3U}) {
    for (double theta = -1.5; theta <= 1.5; theta += 0.01) {
      if (std::abs(theta - kPi / 4.0) <= 0.05 || std::abs(theta + kPi / 4.0) <= 0.05) continue;
      CHECK_MESSAGE(unitarity_defect(IsingCouplings{n, Complex(0.0, theta), Complex(0.0, 0.4)}) > 1e-3,
                    "theta = " << theta);
    }
  }
}

TEST_CASE("two-site transfer matrix is in the permutation span exactly when exp(-i gamma) is real") {
  for (double gamma : {0.0, kPi, -kPi, 2.0 * kPi, 0.3, 1.0, 2.5, -0.8, kPi / 2.0}) {
    const ComplexMatrix m = 2.0 * transfer_matrix(unitary_couplings(2, gamma)).matrix;
    const bool real_delta = std::abs(std::sin(gamma)) < 1e-12;
    CHECK_MESSAGE(perm_span_membership(m).member == real_delta, "gamma = " << gamma);
  }
}

TEST_CASE("partition_check: zero couplings") {
  for (std::size_t n : {2U, 3U}) {
    for (std::size_t tau : {1U, 2U, 4U}) {
      const auto p = partition_check({n, 0.0, 0.0}, tau);
      const double nt = static_cast<double>(n * tau);
      CHECK(std::abs(p.z_brute - std::pow(2.0, nt)) < 1e-9);
      CHECK(std::abs(p.z_transfer - std::pow(2.0, nt / 2.0)) < 1e-9);
      CHECK(std::abs(p.ratio - std::pow(2.0, nt / 2.0)) < 1e-9 * std::pow(2.0, nt / 2.0));
    }
  }
}

TEST_CASE("partition_check: two-by-two lattice against the written-out sum") {
  const double bt = 0.5;
  const double bs = 0.5;
  double hand = 0.0;
  for (int a : {1, -1}) {          // site 0, slice 0
    for (int b : {1, -1}) {        // site 1, slice 0
      for (int c : {1, -1}) {      // site 0, slice 1
        for (int d : {1, -1}) {    // site 1, slice 1
          // Periodic time with two slices counts each vertical pair twice.
          const double time = 2.0 * (a * c + b * d);
          const double space = a * b + c * d;
          hand += std::exp(-bt * time - bs * space);
        }
      }
    }
  }
  const auto p = partition_check({2, bt, bs}, 2);
  CHECK(std::abs(p.z_brute - hand) < 1e-12 * hand);
}

TEST_CASE("partition_check: ratio depends only on the lattice size") {
  const std::pair<double, double> pairs[] = {{0.4, 0.3}, {0.7, 0.2}, {-0.3, 0.9}, {0.05, -0.6}, {1.1, 0.45}, {0.0, 0.8}};
  const auto reference = partition_check({3, pairs[0].first, pairs[0].second}, 3).ratio;
  CHECK(std::abs(reference - std::pow(2.0, 4.5)) < 1e-10 * std::pow(2.0, 4.5));
  for (const auto& [bt, bs] : pairs) {
    const auto ratio = partition_check({3, bt, bs}, 3).ratio;
    CHECK(std::abs(ratio - reference) < 1e-10 * std::abs(reference));
  }
}

TEST_CASE("partition_check: errors") {
  CHECK_THROWS_AS(partition_check({3, 0.1, 0.1}, 0), ArgumentError);
  CHECK_THROWS_AS(partition_check({5, 0.1, 0.1}, 5), SizeLimitError);
}
