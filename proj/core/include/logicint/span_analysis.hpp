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
#include <optional>
#include <span>
#include <vector>

#include "logicint/gate_algebra.hpp"
#include "logicint/operator_core.hpp"

namespace logicint {

/// Relative tolerance on row/column sums used by the membership test.
inline constexpr double kSpanSumTolerance = 1e-8;

struct SpanReport {
  bool member = false;
  /// Shared row and column sum; meaningful only when member.
  Complex common_sum{};
  /// ||m - proj(m)||_F / ||m||_F, proj = orthogonal projection onto the span
  /// of all permutation matrices (0 for the zero matrix).
  double residual = 0.0;
  /// Explicit coefficients over all permutations when they were computed.
  std::optional<GateSum> coefficients;
};

/// Decides whether `m` lies in the complex span of all n x n permutation
/// matrices. That span is exactly the set of matrices whose row sums and
/// column sums all share one value; the residual is computed independently
/// from the closed-form projection onto that set.
///
/// With `with_coefficients`, a minimum-norm decomposition over all n!
/// permutations is attached (n <= 8).
SpanReport perm_span_membership(const ComplexMatrix& m, bool with_coefficients = false);

/// Orthogonal projection onto the constant-row-and-column-sum matrices.
ComplexMatrix project_to_perm_span(const ComplexMatrix& m);

struct Decomposition {
  GateSum coefficients;
  /// ||m - sum c_g P_g||_F / ||m||_F (absolute when m = 0).
  double residual = 0.0;
};

/// Minimum-norm least-squares coefficients of m over the given gates.
Decomposition least_squares_decompose(const ComplexMatrix& m, std::span<const PermutationGate> gates);

inline constexpr std::size_t kMaxUnitModulusSupport = 6;
/// Upper bound on the number of supports a search may enumerate.
inline constexpr double kUnitModulusSupportBudget = 5e7;

/// All decompositions of m over at most `max_support` permutation matrices
/// whose coefficients have modulus 1 (within 1e-9) and reconstruct m within
/// 1e-10 relative Frobenius. m must be 2^N x 2^N with N <= 3. Results are
/// sorted by support.
std::vector<GateSum> unit_modulus_search(const ComplexMatrix& m, std::size_t max_support);

/// Rank of the n! vectorized n x n permutation matrices, computed numerically.
std::size_t permutation_span_rank(std::size_t n);

}  // namespace logicint
