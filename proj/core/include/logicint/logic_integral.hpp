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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "logicint/gate_algebra.hpp"
#include "logicint/operator_core.hpp"
#include "logicint/spin_system.hpp"

namespace logicint {

struct BondEvent {
  std::size_t bond = 0;
  double time = 0.0;

  friend bool operator==(const BondEvent&, const BondEvent&) = default;
};

/// Time-sorted bond events on (0, beta]. Ties in time are broken by bond index.
class Configuration {
 public:
  Configuration() = default;
  /// Sorts `events` canonically; throws ArgumentError on times outside (0, beta].
  Configuration(double beta, std::vector<BondEvent> events);

  double beta() const noexcept { return beta_; }
  std::span<const BondEvent> events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  /// Number of events on bond b.
  std::size_t count(std::size_t b) const;

  /// Throws ArgumentError if any event references a bond outside `sys`.
  void check_bonds(const BondSystem& sys) const;

 private:
  double beta_ = 0.0;
  std::vector<BondEvent> events_;
};

using RandomStream = std::mt19937_64;

/// Independent stream for sample `index` under `seed`. Each sample owns its
/// stream, so the result of a run does not depend on how samples are scheduled.
RandomStream make_stream(std::uint64_t seed, std::uint64_t index);

/// Draws one configuration from independent Poisson processes, one per bond,
/// with rate |J_b| on (0, beta]. Bonds with J_b = 0 never fire.
Configuration sample_configuration(const BondSystem& sys, double beta, RandomStream& stream);

/// Time-ordered product of bond operators, latest event leftmost, as a gate
/// sum. Antiferro bonds enter as (1 - E_b). Couplings are not included.
GateSum kernel(const Configuration& omega, const BondSystem& sys);

struct McEstimate {
  ComplexMatrix mean;
  /// Frobenius norm of the per-entry standard errors.
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Per-entry sample variance (diagnostics).
  Eigen::MatrixXd entry_variance;
};

inline constexpr std::size_t kMaxMcSamples = std::size_t{1} << 32;

/// Monte Carlo estimate of exp(i beta H): the Poisson measure with rates |J_b|
/// reweighted by (-i sign J_b)^(n_b) e^(beta sum_b |J_b|). Deterministic in
/// (sys, beta, samples, seed) regardless of thread count.
McEstimate mc_estimate(const BondSystem& sys, double beta, std::size_t samples, std::uint64_t seed);

/// Same estimator, additionally returning running estimates at each
/// requested sample count (sorted, each in [2, samples]). The last entry is
/// the full estimate.
std::vector<McEstimate> mc_estimate_trace(const BondSystem& sys, double beta, std::size_t samples,
                                          std::uint64_t seed, std::span<const std::size_t> checkpoints);

/// Number of closed world-line loops in a 1-D nearest-neighbour
/// configuration. Each event on {i, i+1} joins the two lower ends and the
/// two upper ends of the cut world lines; strands reaching t = 0 or t = beta
/// are not counted.
std::size_t count_loops(const Configuration& omega, const BondSystem& sys);

}  // namespace logicint
