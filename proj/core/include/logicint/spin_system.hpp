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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicint/gate_algebra.hpp"
#include "logicint/operator_core.hpp"

namespace logicint {

// Basis convention: site 0 is the most significant bit of a basis index and
// spin up (S3 = +1/2) is bit value 0. A spin pattern s_0..s_{N-1} therefore
// sits at index sum_i s_i 2^(N-1-i).

enum class BondKind { exchange, antiferro, custom };

std::string_view to_string(BondKind kind);
BondKind bond_kind_from_string(std::string_view name);

struct Bond {
  std::vector<std::size_t> sites;
  double coupling = 0.0;
  BondKind kind = BondKind::exchange;
  /// Local operator on the bond's sites (first listed site most significant);
  /// used only for BondKind::custom.
  ComplexMatrix custom;
};

/// Sites, bonds, couplings and bond operators of H = -sum_b J_b h_b.
/// Immutable once constructed; the constructor enforces every invariant.
class BondSystem {
 public:
  BondSystem(std::size_t site_count, std::vector<Bond> bonds,
             std::size_t max_sites = kDefaultMaxSites);

  /// Open nearest-neighbour chain {0,1},{1,2},... with a uniform coupling.
  static BondSystem chain(std::size_t site_count, double coupling, BondKind kind = BondKind::exchange);

  std::size_t site_count() const noexcept { return site_count_; }
  std::size_t dim() const noexcept { return std::size_t{1} << site_count_; }
  std::span<const Bond> bonds() const noexcept { return bonds_; }
  const Bond& bond(std::size_t b) const { return bonds_.at(b); }

  /// sum_b |J_b|
  double total_rate() const noexcept;

 private:
  std::size_t site_count_;
  std::vector<Bond> bonds_;
};

struct SpinOperators {
  ComplexMatrix s1;
  ComplexMatrix s2;
  ComplexMatrix s3;
};

/// Spin-1/2 generators with S3 = diag(+1/2, -1/2).
SpinOperators spin_matrices();

/// Gate on an n-site register that swaps the bits of sites i and j.
PermutationGate exchange_gate(std::size_t n_sites, std::size_t i, std::size_t j);

/// Lifts a gate on the bond's local register (first listed site most
/// significant) to the full n-site register.
PermutationGate embed_gate(const PermutationGate& local, std::span<const std::size_t> sites,
                           std::size_t n_sites);

/// Antiferromagnetic bond operator sum_{m,m'} (-1)^(m-m') |m,-m><m',-m'|,
/// which equals 1 - E.
ComplexMatrix antiferro_bond_operator();

/// 2^|b| x 2^|b| operator h_b of a bond (before multiplying by J_b).
ComplexMatrix local_bond_operator(const Bond& bond);

/// Embeds a local operator acting on `sites` into the full n-site register.
ComplexMatrix embed_operator(const ComplexMatrix& local, std::span<const std::size_t> sites,
                             std::size_t n_sites);

/// H = -sum_b J_b h_b as a dense Hermitian matrix.
ComplexMatrix build_hamiltonian(const BondSystem& sys);

}  // namespace logicint
