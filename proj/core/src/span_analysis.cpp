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

#include "logicint/span_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logicint/errors.hpp"

namespace logicint {
namespace {

double relative(double distance, double reference) { return reference > 0.0 ? distance / reference : distance; }

Eigen::MatrixXcd vectorized(std::span<const PermutationGate> gates, Eigen::Index n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n * n, static_cast<Eigen::Index>(gates.size()));
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const auto& g = gates[static_cast<std::size_t>(k)];
    // Column-major vec: entry (row, col) sits at row + col * n.
    for (Eigen::Index j = 0; j < n; ++j) a(g(static_cast<PermutationGate::Index>(j)) + j * n, k) = 1.0;
  }
  return a;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw ArgumentError(std::string(what) + ": matrix must be square");
}

}  // namespace

ComplexMatrix project_to_perm_span(const ComplexMatrix& m) {
  require_square(m, "project_to_perm_span");
  const auto n = static_cast<double>(m.rows());
  const Eigen::VectorXcd r = m.rowwise().sum();
  const Eigen::RowVectorXcd c = m.colwise().sum();
  const Complex s = m.sum();
  ComplexMatrix p = m;
  p.colwise() -= r / n;
  p.rowwise() -= c / n;
  p.array() += 2.0 * s / (n * n);
  return p;
}

SpanReport perm_span_membership(const ComplexMatrix& m, bool with_coefficients) {
  require_square(m, "perm_span_membership");
  const auto n = m.rows();
  const Eigen::VectorXcd r = m.rowwise().sum();
  const Eigen::RowVectorXcd c = m.colwise().sum();
  const Complex common = m.sum() / static_cast<double>(n);

  double spread = 0.0;
  double scale = m.norm();
  for (Eigen::Index k = 0; k < n; ++k) {
    spread = std::max({spread, std::abs(r(k) - common), std::abs(c(k) - common)});
    scale = std::max({scale, std::abs(r(k)), std::abs(c(k))});
  }

  SpanReport report;
  report.member = spread <= kSpanSumTolerance * std::max(scale, 1e-300);
  report.common_sum = report.member ? common : Complex{};
  report.residual = relative((m - project_to_perm_span(m)).norm(), m.norm());
  if (with_coefficients) {
    if (n > 8) throw SizeLimitError("perm_span_membership: explicit coefficients need n <= 8");
    const auto gates = all_permutations(static_cast<std::size_t>(n));
    report.coefficients = least_squares_decompose(m, gates).coefficients;
  }
  return report;
}

Decomposition least_squares_decompose(const ComplexMatrix& m, std::span<const PermutationGate> gates) {
  require_square(m, "least_squares_decompose");
  if (gates.empty()) throw ArgumentError("least_squares_decompose: empty gate set");
  const auto n = m.rows();
  for (const auto& g : gates) {
    if (static_cast<Eigen::Index>(g.dim()) != n) throw ArgumentError("least_squares_decompose: gate dimension mismatch");
  }
  const Eigen::MatrixXcd a = vectorized(gates, n);
  const Eigen::VectorXcd b = m.reshaped();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(a);
  const Eigen::VectorXcd x = cod.solve(b);

  Decomposition out{GateSum(static_cast<std::size_t>(n)), 0.0};
  for (std::size_t k = 0; k < gates.size(); ++k) out.coefficients.add(gates[k], x(static_cast<Eigen::Index>(k)));
  out.residual = relative((a * x - b).norm(), b.norm());
  return out;
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  double v = 1.0;
  for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
  return v;
}

// Advances a sorted k-combination of {0..n-1}; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const auto k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<GateSum> unit_modulus_search(const ComplexMatrix& m, std::size_t max_support) {
  require_square(m, "unit_modulus_search");
  const auto dim = static_cast<std::size_t>(m.rows());
  if ((dim & (dim - 1)) != 0) throw ArgumentError("unit_modulus_search: dimension must be a power of two");
  if (dim > 8) throw SizeLimitError("unit_modulus_search: only registers of up to 3 bits are searched");
  if (max_support == 0 || max_support > kMaxUnitModulusSupport) {
    throw ArgumentError("unit_modulus_search: max_support must be in [1, " + std::to_string(kMaxUnitModulusSupport) + "]");
  }
  const auto gates = all_permutations(dim);
  double supports = 0.0;
  for (std::size_t k = 1; k <= max_support; ++k) supports += binomial(gates.size(), k);
  if (supports > kUnitModulusSupportBudget) {
    throw SizeLimitError("unit_modulus_search: " + std::to_string(supports) + " supports exceed the search budget");
  }

  const auto n = static_cast<Eigen::Index>(dim);
  const double m_norm = m.norm();
  // Projections <P_g, m> = sum_j m(g(j), j).
  std::vector<Complex> projection(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    Complex acc{};
    for (Eigen::Index j = 0; j < n; ++j) acc += m(gates[g](static_cast<PermutationGate::Index>(j)), j);
    projection[g] = acc;
  }
  auto overlap = [&](std::size_t g, std::size_t h) {
    double count = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const auto jj = static_cast<PermutationGate::Index>(j);
      if (gates[g](jj) == gates[h](jj)) count += 1.0;
    }
    return count;
  };

  std::vector<GateSum> found;
  for (std::size_t k = 1; k <= max_support; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t p = 0; p < k; ++p) idx[p] = p;
    do {
      const auto kk = static_cast<Eigen::Index>(k);
      Eigen::MatrixXcd gram(kk, kk);
      Eigen::VectorXcd rhs(kk);
      for (Eigen::Index p = 0; p < kk; ++p) {
        rhs(p) = projection[idx[static_cast<std::size_t>(p)]];
        for (Eigen::Index q = 0; q < kk; ++q) {
          gram(p, q) = overlap(idx[static_cast<std::size_t>(p)], idx[static_cast<std::size_t>(q)]);
        }
      }
      Eigen::VectorXcd x;
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
      if (lu.rank() == kk) {
        x = lu.solve(rhs);
      } else {
        // Dependent support: minimum-norm solution.
        std::vector<PermutationGate> subset;
        for (auto i : idx) subset.push_back(gates[i]);
        x = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd>(vectorized(subset, n)).solve(m.reshaped());
      }
      bool unit = true;
      for (Eigen::Index p = 0; p < kk && unit; ++p) unit = std::abs(std::abs(x(p)) - 1.0) <= 1e-9;
      if (!unit) continue;

      GateSum candidate(dim);
      for (Eigen::Index p = 0; p < kk; ++p) candidate.add(gates[idx[static_cast<std::size_t>(p)]], x(p));
      if (relative((render(candidate) - m).norm(), m_norm) < 1e-10) found.push_back(std::move(candidate));
    } while (next_combination(idx, gates.size()));
  }

  std::sort(found.begin(), found.end(), [](const GateSum& a, const GateSum& b) {
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                        [](const auto& x, const auto& y) { return x.first < y.first; });
  });
  return found;
}

std::size_t permutation_span_rank(std::size_t n) {
  const auto gates = all_permutations(n);
  const Eigen::MatrixXd a = vectorized(gates, static_cast<Eigen::Index>(n)).real().transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace logicint
