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

#include "logicint/spin_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logicint/errors.hpp"

namespace logicint {
namespace {

std::size_t bit_of(std::size_t n_sites, std::size_t site) { return n_sites - 1 - site; }

std::string bond_label(std::size_t b) { return "bond " + std::to_string(b); }

void validate_bond(const Bond& bond, std::size_t b, std::size_t site_count) {
  if (bond.sites.empty()) throw ArgumentError(bond_label(b) + " has no sites");
  for (auto s : bond.sites) {
    if (s >= site_count) {
      throw ArgumentError(bond_label(b) + " references site " + std::to_string(s) + " outside the " +
                          std::to_string(site_count) + "-site system");
    }
  }
  auto sorted = bond.sites;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError(bond_label(b) + " lists a site more than once");
  }
  if (!std::isfinite(bond.coupling)) throw ArgumentError(bond_label(b) + " has a non-finite coupling");
  if (bond.kind != BondKind::custom && bond.sites.size() != 2) {
    throw ArgumentError(bond_label(b) + " of kind " + std::string(to_string(bond.kind)) +
                        " needs exactly 2 sites");
  }
  if (bond.kind == BondKind::custom) {
    if (bond.sites.size() >= 31) throw SizeLimitError(bond_label(b) + " spans too many sites");
    const auto local_dim = Eigen::Index{1} << bond.sites.size();
    if (bond.custom.rows() != local_dim || bond.custom.cols() != local_dim) {
      throw ArgumentError(bond_label(b) + " custom operator must be " + std::to_string(local_dim) + "x" +
                          std::to_string(local_dim));
    }
    if (!bond.custom.allFinite()) throw ArgumentError(bond_label(b) + " custom operator has non-finite entries");
    if (hermiticity_defect(bond.custom) > kHermitianTolerance) {
      throw ArgumentError(bond_label(b) + " custom operator is not Hermitian");
    }
  }
}

}  // namespace

std::string_view to_string(BondKind kind) {
  switch (kind) {
    case BondKind::exchange:
      return "exchange";
    case BondKind::antiferro:
      return "antiferro";
    case BondKind::custom:
      return "custom";
  }
  return "unknown";
}

BondKind bond_kind_from_string(std::string_view name) {
  if (name == "exchange") return BondKind::exchange;
  if (name == "antiferro") return BondKind::antiferro;
  if (name == "custom") return BondKind::custom;
  throw ArgumentError("unknown bond kind '" + std::string(name) + "'");
}

BondSystem::BondSystem(std::size_t site_count, std::vector<Bond> bonds, std::size_t max_sites)
    : site_count_(site_count), bonds_(std::move(bonds)) {
  if (site_count_ == 0) throw ArgumentError("a bond system needs at least one site");
  if (site_count_ > max_sites) {
    throw SizeLimitError(std::to_string(site_count_) + " sites exceed the " + std::to_string(max_sites) +
                         "-site limit");
  }
  for (std::size_t b = 0; b < bonds_.size(); ++b) validate_bond(bonds_[b], b, site_count_);
}

BondSystem BondSystem::chain(std::size_t site_count, double coupling, BondKind kind) {
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i + 1 < site_count; ++i) bonds.push_back(Bond{{i, i + 1}, coupling, kind, {}});
  return BondSystem(site_count, std::move(bonds));
}

double BondSystem::total_rate() const noexcept {
  double r = 0.0;
  for (const auto& b : bonds_) r += std::abs(b.coupling);
  return r;
}

SpinOperators spin_matrices() {
  using namespace std::complex_literals;
  SpinOperators s{ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
  s.s1 << 0.0, 0.5, 0.5, 0.0;
  s.s2 << 0.0, -0.5i, 0.5i, 0.0;
  s.s3 << 0.5, 0.0, 0.0, -0.5;
  return s;
}

PermutationGate exchange_gate(std::size_t n_sites, std::size_t i, std::size_t j) {
  if (i == j) throw ArgumentError("exchange_gate: sites must differ");
  if (i >= n_sites || j >= n_sites) throw ArgumentError("exchange_gate: site out of range");
  if (n_sites > 31) throw SizeLimitError("exchange_gate: register too large");
  const auto bi = bit_of(n_sites, i);
  const auto bj = bit_of(n_sites, j);
  const std::size_t dim = std::size_t{1} << n_sites;
  std::vector<PermutationGate::Index> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto vi = (x >> bi) & 1U;
    const auto vj = (x >> bj) & 1U;
    std::size_t y = x & ~((std::size_t{1} << bi) | (std::size_t{1} << bj));
    y |= (vj << bi) | (vi << bj);
    image[x] = static_cast<PermutationGate::Index>(y);
  }
  return PermutationGate(std::move(image));
}

PermutationGate embed_gate(const PermutationGate& local, std::span<const std::size_t> sites,
                           std::size_t n_sites) {
  const auto k = sites.size();
  if (local.dim() != (std::size_t{1} << k)) {
    throw ArgumentError("embed_gate: local gate does not match the number of sites");
  }
  if (n_sites > 31) throw SizeLimitError("embed_gate: register too large");
  std::size_t mask = 0;
  for (auto s : sites) {
    if (s >= n_sites) throw ArgumentError("embed_gate: site out of range");
    mask |= std::size_t{1} << bit_of(n_sites, s);
  }
  const std::size_t dim = std::size_t{1} << n_sites;
  std::vector<PermutationGate::Index> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t l = 0;
    for (auto s : sites) l = (l << 1) | ((x >> bit_of(n_sites, s)) & 1U);
    const std::size_t target = local(static_cast<PermutationGate::Index>(l));
    std::size_t y = x & ~mask;
    for (std::size_t m = 0; m < k; ++m) y |= ((target >> (k - 1 - m)) & 1U) << bit_of(n_sites, sites[m]);
    image[x] = static_cast<PermutationGate::Index>(y);
  }
  return PermutationGate(std::move(image));
}

ComplexMatrix antiferro_bond_operator() {
  return ComplexMatrix::Identity(4, 4) - exchange_gate(2, 0, 1).matrix();
}

ComplexMatrix local_bond_operator(const Bond& bond) {
  switch (bond.kind) {
    case BondKind::exchange:
      return exchange_gate(2, 0, 1).matrix();
    case BondKind::antiferro:
      return antiferro_bond_operator();
    case BondKind::custom:
      return bond.custom;
  }
  return {};
}

ComplexMatrix embed_operator(const ComplexMatrix& local, std::span<const std::size_t> sites,
                             std::size_t n_sites) {
  const auto k = sites.size();
  const std::size_t dim = max_dimension(n_sites);
  const auto local_dim = Eigen::Index{1} << k;
  if (local.rows() != local_dim || local.cols() != local_dim) {
    throw ArgumentError("embed_operator: local operator does not match the number of sites");
  }
  std::size_t mask = 0;
  for (auto s : sites) {
    if (s >= n_sites) throw ArgumentError("embed_operator: site out of range");
    mask |= std::size_t{1} << bit_of(n_sites, s);
  }

  // First listed site is the most significant local bit.
  auto local_index = [&](std::size_t x) {
    std::size_t l = 0;
    for (auto s : sites) l = (l << 1) | ((x >> bit_of(n_sites, s)) & 1U);
    return l;
  };
  auto scatter = [&](std::size_t x, std::size_t l) {
    std::size_t y = x & ~mask;
    for (std::size_t m = 0; m < k; ++m) {
      const auto bit = (l >> (k - 1 - m)) & 1U;
      y |= bit << bit_of(n_sites, sites[m]);
    }
    return y;
  };

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const auto lx = local_index(x);
    for (Eigen::Index ly = 0; ly < local_dim; ++ly) {
      const Complex v = local(ly, static_cast<Eigen::Index>(lx));
      if (v == Complex{}) continue;
      out(static_cast<Eigen::Index>(scatter(x, static_cast<std::size_t>(ly))), static_cast<Eigen::Index>(x)) += v;
    }
  }
  return out;
}

ComplexMatrix build_hamiltonian(const BondSystem& sys) {
  const auto dim = static_cast<Eigen::Index>(max_dimension(sys.site_count()));
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& bond : sys.bonds()) {
    if (bond.coupling == 0.0) continue;
    h -= bond.coupling * embed_operator(local_bond_operator(bond), bond.sites, sys.site_count());
  }
  return h;
}

}  // namespace logicint
