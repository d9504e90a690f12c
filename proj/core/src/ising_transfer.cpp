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

#include "logicint/ising_transfer.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "logicint/errors.hpp"

namespace logicint {
namespace {

void validate(const IsingCouplings& c) {
  if (c.n_sites < 2) throw ArgumentError("Ising couplings need at least 2 sites");
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(c.coupling_time) || !finite(c.coupling_space)) throw ArgumentError("Ising couplings must be finite");
}

// Spin (+1/-1) of `site` in basis index x: bit value 0 means +1.
int spin(std::uint64_t x, std::size_t site, std::size_t n_sites) {
  return ((x >> (n_sites - 1 - site)) & 1U) ? -1 : 1;
}

}  // namespace

IsingCouplings unitary_couplings(std::size_t n_sites, double gamma, int sign) {
  if (sign != 1 && sign != -1) throw ArgumentError("unitary_couplings: sign must be +1 or -1");
  return {n_sites, Complex(0.0, sign * std::numbers::pi / 4.0), Complex(0.0, gamma)};
}

TransferMatrix transfer_matrix(const IsingCouplings& c, std::size_t max_sites) {
  validate(c);
  if (c.n_sites > max_sites) {
    throw SizeLimitError("transfer_matrix: " + std::to_string(c.n_sites) + " sites exceed the " +
                         std::to_string(max_sites) + "-site limit");
  }
  const std::size_t n = c.n_sites;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double prefactor = std::pow(2.0, -0.5 * static_cast<double>(n));

  ComplexMatrix t(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    int space = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) space += spin(col, i, n) * spin(col, i + 1, n);
    for (std::uint64_t row = 0; row < dim; ++row) {
      int time = 0;
      for (std::size_t i = 0; i < n; ++i) time += spin(row, i, n) * spin(col, i, n);
      t(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          prefactor * std::exp(-c.coupling_time * static_cast<double>(time) -
                               c.coupling_space * static_cast<double>(space));
    }
  }
  return {c, std::move(t)};
}

double unitarity_defect(const IsingCouplings& c) { return unitarity_defect(transfer_matrix(c).matrix); }

PartitionCheck partition_check(const IsingCouplings& c, std::size_t tau) {
  validate(c);
  if (tau < 1) throw ArgumentError("partition_check: tau must be at least 1");
  const std::size_t n = c.n_sites;
  if (n * tau > kMaxPartitionSpins) {
    throw SizeLimitError("partition_check: " + std::to_string(n * tau) + " spins exceed the brute-force limit of " +
                         std::to_string(kMaxPartitionSpins));
  }

  // Histogram over (time-bond sum, space-bond sum); both are integers in
  // [-bonds, bonds], so the Boltzmann weights are evaluated once per bin.
  const std::size_t time_bonds = n * tau;
  const std::size_t space_bonds = (n - 1) * tau;
  const std::size_t width = 2 * space_bonds + 1;
  std::vector<std::uint64_t> bins((2 * time_bonds + 1) * width, 0);
  const std::uint64_t total = std::uint64_t{1} << (n * tau);
  for (std::uint64_t x = 0; x < total; ++x) {
    auto s = [&](std::size_t i, std::size_t t) { return ((x >> (t * n + i)) & 1U) ? -1 : 1; };
    long time = 0;
    long space = 0;
    for (std::size_t t = 0; t < tau; ++t) {
      const std::size_t next = (t + 1) % tau;
      for (std::size_t i = 0; i < n; ++i) time += s(i, t) * s(i, next);
      for (std::size_t i = 0; i + 1 < n; ++i) space += s(i, t) * s(i + 1, t);
    }
    ++bins[static_cast<std::size_t>(time + static_cast<long>(time_bonds)) * width +
           static_cast<std::size_t>(space + static_cast<long>(space_bonds))];
  }

  PartitionCheck out;
  for (std::size_t a = 0; a < 2 * time_bonds + 1; ++a) {
    for (std::size_t b = 0; b < width; ++b) {
      const auto count = bins[a * width + b];
      if (count == 0) continue;
      const double time = static_cast<double>(a) - static_cast<double>(time_bonds);
      const double space = static_cast<double>(b) - static_cast<double>(space_bonds);
      out.z_brute += static_cast<double>(count) * std::exp(-c.coupling_time * time - c.coupling_space * space);
    }
  }

  const auto t = transfer_matrix(c).matrix;
  ComplexMatrix power = t;
  for (std::size_t k = 1; k < tau; ++k) power = power * t;
  out.z_transfer = power.trace();
  out.ratio = out.z_brute / out.z_transfer;
  return out;
}

}  // namespace logicint
