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
#include <numbers>

#include "logicint/operator_core.hpp"

namespace logicint {

/// Couplings of the anisotropic Ising model on an open chain of n_sites
/// spins propagated in time. Both couplings may be complex, which is how the
/// transfer matrix is continued to imaginary time.
struct IsingCouplings {
  std::size_t n_sites = 2;
  Complex coupling_time{};   // between a spin and itself one slice later
  Complex coupling_space{};  // between neighbours inside a slice
};

/// -i pi/4: the time coupling at which the continued transfer matrix is
/// unitary and reproduces the standard two-site phase pattern.
inline const Complex kUnitaryTimeCoupling{0.0, -std::numbers::pi / 4.0};

/// Couplings on the unitary locus: time coupling `sign` * i pi/4 (sign = +1
/// or -1) and space coupling i*gamma.
IsingCouplings unitary_couplings(std::size_t n_sites, double gamma, int sign = -1);

struct TransferMatrix {
  IsingCouplings couplings;
  ComplexMatrix matrix;
};

/// <s'|T|s> = 2^(-n/2) exp(-c_t sum_i s'_i s_i - c_s sum_{i<n-1} s_i s_{i+1}),
/// with spin +1 on bit value 0 and site 0 most significant.
TransferMatrix transfer_matrix(const IsingCouplings& c, std::size_t max_sites = kDefaultMaxSites);

/// || T T^dagger - 1 ||_F
double unitarity_defect(const IsingCouplings& c);

struct PartitionCheck {
  Complex z_brute{};
  Complex z_transfer{};
  Complex ratio{};
};

/// Largest lattice (n_sites * tau spins) summed by brute force.
inline constexpr std::size_t kMaxPartitionSpins = 24;

/// Compares the direct Boltzmann sum over an n_sites x tau lattice (periodic in
/// time, open in space) with tr T^tau.
PartitionCheck partition_check(const IsingCouplings& c, std::size_t tau);

}  // namespace logicint
