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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "logicint/operator_core.hpp"

namespace logicint {

class BondSystem;

/// A classical reversible gate: a bijection on the basis indices {0..dim-1}.
/// The gate sends basis state |j> to |image(j)>, so its matrix has a single 1
/// at (image(j), j) in each column j.
class PermutationGate {
 public:
  using Index = std::uint32_t;

  /// Throws ArgumentError unless `image` is a bijection on {0..size-1}.
  explicit PermutationGate(std::vector<Index> image);

  static PermutationGate identity(std::size_t dim);

  /// Recognizes a 0/1 matrix with one 1 per row and column; nullopt otherwise.
  static std::optional<PermutationGate> from_matrix(const ComplexMatrix& m, double tol = 1e-12);

  std::size_t dim() const noexcept { return image_.size(); }
  Index operator()(Index j) const { return image_[j]; }
  std::span<const Index> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  PermutationGate inverse() const;
  ComplexMatrix matrix() const;

  friend auto operator<=>(const PermutationGate&, const PermutationGate&) = default;

 private:
  std::vector<Index> image_;
};

/// Matrix-product convention p * q: apply q first, then p.
PermutationGate compose(const PermutationGate& p, const PermutationGate& q);

/// Every permutation of n letters in lexicographic order of the image array.
std::vector<PermutationGate> all_permutations(std::size_t n);

/// Breadth-first closure of `generators` under composition, sorted. Throws
/// SizeLimitError once the group grows past `max_order` elements.
std::vector<PermutationGate> group_closure(std::span<const PermutationGate> generators,
                                           std::size_t max_order);

/// Coefficients below this magnitude are dropped from a GateSum.
inline constexpr double kPruneThreshold = 1e-15;

/// Finitely supported element of the group algebra: sum_g c_g P_g.
class GateSum {
 public:
  using Terms = std::map<PermutationGate, Complex>;

  explicit GateSum(std::size_t dim) : dim_(dim) {}
  static GateSum unit(std::size_t dim);  // {identity: 1}

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of `g` (zero when absent).
  Complex coefficient(const PermutationGate& g) const;

  /// Accumulates c into the coefficient of g; prunes if the sum vanishes.
  void add(const PermutationGate& g, Complex c);

  GateSum& operator+=(const GateSum& other);
  GateSum& operator*=(Complex scale);

  /// Drops every term with |c| < threshold.
  void prune(double threshold = kPruneThreshold);

 private:
  std::size_t dim_;
  Terms terms_;
};

/// Group-algebra product: (sum_g a_g g)(sum_h b_h h) = sum a_g b_h (g*h).
GateSum operator*(const GateSum& a, const GateSum& b);

/// sum_g c_g P_g as a dense matrix.
ComplexMatrix render(const GateSum& gs);

/// Adds the rendered gate sum into `target` (same dimension).
void accumulate_render(const GateSum& gs, Complex scale, ComplexMatrix& target);

inline constexpr std::size_t kDefaultSeriesOrder = 12;
inline constexpr std::size_t kMaxSeriesOrder = 30;

struct SeriesExpansion {
  GateSum sum;
  std::size_t order = 0;
  /// Leading neglected term (sum_b |J_b| beta)^(order+1) / (order+1)!.
  double truncation_bound = 0.0;
  /// Rigorous Frobenius bound on || render(sum) - exp(i beta H) ||:
  /// sqrt(dim) * x^(order+1)/(order+1)! * e^x with x = beta * sum_b |J_b| ||h_b||.
  double frobenius_bound = 0.0;
};

/// Group-algebra element of the bond operator h_b (coupling excluded),
/// embedded in the full register. Throws UnsupportedDecomposition if h_b is
/// neither a permutation nor identity minus a permutation.
GateSum bond_operator_sum(const BondSystem& sys, std::size_t bond);

/// Group-algebra element of J_b h_b for one bond, embedded in the full
/// register.
GateSum bond_gate_sum(const BondSystem& sys, std::size_t bond);

/// Taylor expansion of exp(i beta H) = sum_n (-i beta)^n / n! (sum_b J_b h_b)^n
/// carried out in the group algebra, aggregated per permutation gate.
SeriesExpansion series_expand(const BondSystem& sys, double beta,
                              std::size_t order = kDefaultSeriesOrder);

}  // namespace logicint
