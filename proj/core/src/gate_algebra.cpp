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

#include "logicint/gate_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "logicint/errors.hpp"
#include "logicint/spin_system.hpp"

namespace logicint {

PermutationGate::PermutationGate(std::vector<Index> image) : image_(std::move(image)) {
  if (image_.empty()) throw ArgumentError("PermutationGate: empty image");
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw ArgumentError("PermutationGate: image is not a bijection");
    seen[v] = true;
  }
}

PermutationGate PermutationGate::identity(std::size_t dim) {
  std::vector<Index> image(dim);
  std::iota(image.begin(), image.end(), Index{0});
  return PermutationGate(std::move(image));
}

std::optional<PermutationGate> PermutationGate::from_matrix(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return std::nullopt;
  std::vector<Index> image(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index hit = -1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (std::abs(v - 1.0) <= tol) {
        if (hit >= 0) return std::nullopt;
        hit = i;
      } else if (std::abs(v) > tol) {
        return std::nullopt;
      }
    }
    if (hit < 0) return std::nullopt;
    image[static_cast<std::size_t>(j)] = static_cast<Index>(hit);
  }
  std::vector<bool> seen(image.size(), false);
  for (auto v : image) {
    if (seen[v]) return std::nullopt;
    seen[v] = true;
  }
  return PermutationGate(std::move(image));
}

bool PermutationGate::is_identity() const noexcept {
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (image_[j] != j) return false;
  }
  return true;
}

PermutationGate PermutationGate::inverse() const {
  std::vector<Index> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = static_cast<Index>(j);
  return PermutationGate(std::move(inv));
}

ComplexMatrix PermutationGate::matrix() const {
  const auto n = static_cast<Eigen::Index>(image_.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(image_[static_cast<std::size_t>(j)], j) = 1.0;
  return m;
}

PermutationGate compose(const PermutationGate& p, const PermutationGate& q) {
  if (p.dim() != q.dim()) throw ArgumentError("compose: dimension mismatch");
  std::vector<PermutationGate::Index> image(p.dim());
  for (std::size_t j = 0; j < image.size(); ++j) image[j] = p(q(static_cast<PermutationGate::Index>(j)));
  return PermutationGate(std::move(image));
}

std::vector<PermutationGate> all_permutations(std::size_t n) {
  if (n == 0) throw ArgumentError("all_permutations: n must be positive");
  if (n > 10) throw SizeLimitError("all_permutations: n! is too large for n = " + std::to_string(n));
  std::vector<PermutationGate::Index> image(n);
  std::iota(image.begin(), image.end(), PermutationGate::Index{0});
  std::vector<PermutationGate> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<PermutationGate> group_closure(std::span<const PermutationGate> generators,
                                           std::size_t max_order) {
  if (generators.empty()) throw ArgumentError("group_closure: no generators");
  const auto dim = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != dim) throw ArgumentError("group_closure: generators differ in dimension");
  }
  std::set<PermutationGate> seen{PermutationGate::identity(dim)};
  std::deque<PermutationGate> frontier{PermutationGate::identity(dim)};
  while (!frontier.empty()) {
    const auto current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      auto next = compose(g, current);
      if (seen.insert(next).second) {
        if (seen.size() > max_order) {
          throw SizeLimitError("group_closure: group exceeds " + std::to_string(max_order) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

GateSum GateSum::unit(std::size_t dim) {
  GateSum gs(dim);
  gs.add(PermutationGate::identity(dim), 1.0);
  return gs;
}

Complex GateSum::coefficient(const PermutationGate& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Complex{} : it->second;
}

void GateSum::add(const PermutationGate& g, Complex c) {
  if (g.dim() != dim_) throw ArgumentError("GateSum::add: gate dimension mismatch");
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

GateSum& GateSum::operator+=(const GateSum& other) {
  if (other.dim_ != dim_) throw ArgumentError("GateSum: dimension mismatch");
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

GateSum& GateSum::operator*=(Complex scale) {
  for (auto& [g, c] : terms_) c *= scale;
  prune();
  return *this;
}

void GateSum::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

GateSum operator*(const GateSum& a, const GateSum& b) {
  if (a.dim() != b.dim()) throw ArgumentError("GateSum product: dimension mismatch");
  GateSum out(a.dim());
  for (const auto& [g, cg] : a.terms()) {
    for (const auto& [h, ch] : b.terms()) out.add(compose(g, h), cg * ch);
  }
  return out;
}

void accumulate_render(const GateSum& gs, Complex scale, ComplexMatrix& target) {
  const auto n = static_cast<Eigen::Index>(gs.dim());
  if (target.rows() != n || target.cols() != n) throw ArgumentError("accumulate_render: dimension mismatch");
  for (const auto& [g, c] : gs.terms()) {
    const Complex v = scale * c;
    for (Eigen::Index j = 0; j < n; ++j) target(g(static_cast<PermutationGate::Index>(j)), j) += v;
  }
}

ComplexMatrix render(const GateSum& gs) {
  const auto n = static_cast<Eigen::Index>(gs.dim());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  accumulate_render(gs, 1.0, m);
  return m;
}

namespace {

struct BondAlgebra {
  GateSum element;
  double operator_norm;  // upper bound on ||h_b||
};

BondAlgebra bond_algebra(const BondSystem& sys, std::size_t b) {
  const auto& bond = sys.bond(b);
  const auto n = sys.site_count();
  const auto identity = PermutationGate::identity(sys.dim());
  GateSum gs(sys.dim());
  switch (bond.kind) {
    case BondKind::exchange:
      gs.add(exchange_gate(n, bond.sites[0], bond.sites[1]), 1.0);
      return {gs, 1.0};
    case BondKind::antiferro:
      gs.add(identity, 1.0);
      gs.add(exchange_gate(n, bond.sites[0], bond.sites[1]), -1.0);
      return {gs, 2.0};
    case BondKind::custom:
      break;
  }
  if (auto p = PermutationGate::from_matrix(bond.custom)) {
    gs.add(embed_gate(*p, bond.sites, n), 1.0);
    return {gs, 1.0};
  }
  const ComplexMatrix complement = ComplexMatrix::Identity(bond.custom.rows(), bond.custom.cols()) - bond.custom;
  if (auto p = PermutationGate::from_matrix(complement)) {
    gs.add(identity, 1.0);
    gs.add(embed_gate(*p, bond.sites, n), -1.0);
    return {gs, 2.0};
  }
  throw UnsupportedDecomposition("bond " + std::to_string(b) +
                                 ": custom operator is neither a permutation nor identity minus a permutation");
}

}  // namespace

GateSum bond_operator_sum(const BondSystem& sys, std::size_t bond) { return bond_algebra(sys, bond).element; }

GateSum bond_gate_sum(const BondSystem& sys, std::size_t bond) {
  auto gs = bond_algebra(sys, bond).element;
  gs *= sys.bond(bond).coupling;
  return gs;
}

SeriesExpansion series_expand(const BondSystem& sys, double beta, std::size_t order) {
  if (order > kMaxSeriesOrder) {
    throw ArgumentError("series_expand: order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxSeriesOrder));
  }
  if (!std::isfinite(beta)) throw ArgumentError("series_expand: beta must be finite");

  const auto dim = sys.dim();
  GateSum generator(dim);
  double norm_rate = 0.0;
  for (std::size_t b = 0; b < sys.bonds().size(); ++b) {
    // Validate every bond even if its coupling vanishes.
    auto alg = bond_algebra(sys, b);
    if (sys.bond(b).coupling == 0.0) continue;
    alg.element *= sys.bond(b).coupling;
    generator += alg.element;
    norm_rate += std::abs(sys.bond(b).coupling) * alg.operator_norm;
  }

  SeriesExpansion out{GateSum::unit(dim), order, 0.0, 0.0};
  GateSum term = GateSum::unit(dim);
  const Complex step(0.0, -beta);
  for (std::size_t n = 1; n <= order && beta != 0.0 && !generator.empty(); ++n) {
    term = term * generator;
    term *= step / static_cast<double>(n);
    out.sum += term;
  }
  out.sum.prune();

  // x^(n+1) / (n+1)!
  auto leading = [order](double x) {
    double v = 1.0;
    for (std::size_t k = 1; k <= order + 1; ++k) v *= x / static_cast<double>(k);
    return v;
  };
  const double x_rate = std::abs(beta) * sys.total_rate();
  const double x_norm = std::abs(beta) * norm_rate;
  out.truncation_bound = leading(x_rate);
  out.frobenius_bound = std::sqrt(static_cast<double>(dim)) * leading(x_norm) * std::exp(x_norm);
  return out;
}

}  // namespace logicint
