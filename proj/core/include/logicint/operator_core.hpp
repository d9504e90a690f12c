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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace logicint {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest register handled by the dense routines (2^12 = 4096 states).
inline constexpr std::size_t kDefaultMaxSites = 12;

/// Entrywise tolerance on |h - h^dagger| accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

/// Dimension limit corresponding to `max_sites` spin-1/2 sites.
std::size_t max_dimension(std::size_t max_sites = kDefaultMaxSites);

/// Kronecker product a (x) b. Throws SizeLimitError when either dimension of
/// the result would exceed 2^max_sites.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_sites = kDefaultMaxSites);

/// max |h_ij - conj(h_ji)|; +inf for non-square input.
double hermiticity_defect(const ComplexMatrix& h);

/// exp(i * beta * h) for Hermitian h, computed from the eigendecomposition
/// h = V diag(lambda) V^dagger. Never symmetrizes: a non-Hermitian h (defect
/// above kHermitianTolerance) raises ContractViolation.
ComplexMatrix hermitian_evolve(const ComplexMatrix& h, double beta);

/// || u u^dagger - 1 ||_F
double unitarity_defect(const ComplexMatrix& u);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& m);

}  // namespace logicint
