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

#include "logicint/logic_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "logicint/errors.hpp"

namespace logicint {

Configuration::Configuration(double beta, std::vector<BondEvent> events) : beta_(beta), events_(std::move(events)) {
  if (!(beta_ >= 0.0) || !std::isfinite(beta_)) throw ArgumentError("Configuration: beta must be finite and >= 0");
  for (const auto& e : events_) {
    if (!(e.time > 0.0 && e.time <= beta_)) {
      throw ArgumentError("Configuration: event time " + std::to_string(e.time) + " outside (0, beta]");
    }
  }
  std::sort(events_.begin(), events_.end(), [](const BondEvent& a, const BondEvent& b) {
    return a.time < b.time || (a.time == b.time && a.bond < b.bond);
  });
}

std::size_t Configuration::count(std::size_t b) const {
  return static_cast<std::size_t>(
      std::count_if(events_.begin(), events_.end(), [b](const BondEvent& e) { return e.bond == b; }));
}

void Configuration::check_bonds(const BondSystem& sys) const {
  for (const auto& e : events_) {
    if (e.bond >= sys.bonds().size()) {
      throw ArgumentError("configuration references bond " + std::to_string(e.bond) + " but the system has " +
                          std::to_string(sys.bonds().size()));
    }
  }
}

RandomStream make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return RandomStream(seq);
}

Configuration sample_configuration(const BondSystem& sys, double beta, RandomStream& stream) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ArgumentError("sample_configuration: beta must be finite and >= 0");
  std::vector<BondEvent> events;
  if (beta == 0.0) return Configuration(beta, std::move(events));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t b = 0; b < sys.bonds().size(); ++b) {
    const double rate = std::abs(sys.bond(b).coupling);
    if (rate == 0.0) continue;
    std::poisson_distribution<std::uint64_t> count(rate * beta);
    const auto n = count(stream);
    for (std::uint64_t k = 0; k < n; ++k) {
      // unit() is in [0, 1), so the time lands in (0, beta].
      events.push_back({b, beta * (1.0 - unit(stream))});
    }
  }
  return Configuration(beta, std::move(events));
}

namespace {

std::vector<GateSum> bond_operators(const BondSystem& sys) {
  std::vector<GateSum> ops;
  ops.reserve(sys.bonds().size());
  for (std::size_t b = 0; b < sys.bonds().size(); ++b) ops.push_back(bond_operator_sum(sys, b));
  return ops;
}

GateSum kernel_with(const Configuration& omega, const std::vector<GateSum>& ops, std::size_t dim) {
  GateSum k = GateSum::unit(dim);
  for (const auto& e : omega.events()) k = ops[e.bond] * k;
  return k;
}

}  // namespace

GateSum kernel(const Configuration& omega, const BondSystem& sys) {
  omega.check_bonds(sys);
  std::vector<GateSum> ops(sys.bonds().size(), GateSum(sys.dim()));
  for (const auto& e : omega.events()) {
    if (ops[e.bond].empty()) ops[e.bond] = bond_operator_sum(sys, e.bond);
  }
  return kernel_with(omega, ops, sys.dim());
}

namespace {

constexpr std::size_t kBlockSize = 1024;

struct Moments {
  ComplexMatrix sum;
  Eigen::MatrixXd sum_sq;

  explicit Moments(Eigen::Index n) : sum(ComplexMatrix::Zero(n, n)), sum_sq(Eigen::MatrixXd::Zero(n, n)) {}
  Moments& operator+=(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
};

class Sampler {
 public:
  Sampler(const BondSystem& sys, double beta, std::uint64_t seed)
      : sys_(sys), beta_(beta), seed_(seed), ops_(bond_operators(sys)), scale_(std::exp(beta * sys.total_rate())) {}

  // Adds sample `index` into `m`.
  void add_sample(std::uint64_t index, Moments& m, std::vector<std::pair<std::uint64_t, Complex>>& scratch) const {
    auto stream = make_stream(seed_, index);
    const auto omega = sample_configuration(sys_, beta_, stream);

    // (-i sign J_b)^(n_b), tracked as a power of -i and an overall sign.
    unsigned quarter_turns = 0;
    bool negative = false;
    for (const auto& e : omega.events()) {
      ++quarter_turns;
      if (sys_.bond(e.bond).coupling < 0.0) negative = !negative;
    }
    static constexpr Complex kPowers[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    Complex weight = kPowers[quarter_turns % 4] * scale_;
    if (negative) weight = -weight;

    const auto k = kernel_with(omega, ops_, sys_.dim());
    const auto dim = static_cast<std::uint64_t>(sys_.dim());
    scratch.clear();
    for (const auto& [g, c] : k.terms()) {
      for (std::uint64_t j = 0; j < dim; ++j) {
        scratch.emplace_back(static_cast<std::uint64_t>(g(static_cast<PermutationGate::Index>(j))) * dim + j, c);
      }
    }
    std::sort(scratch.begin(), scratch.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t p = 0; p < scratch.size();) {
      const auto key = scratch[p].first;
      Complex v{};
      for (; p < scratch.size() && scratch[p].first == key; ++p) v += scratch[p].second;
      v *= weight;
      const auto row = static_cast<Eigen::Index>(key / dim);
      const auto col = static_cast<Eigen::Index>(key % dim);
      m.sum(row, col) += v;
      m.sum_sq(row, col) += std::norm(v);
    }
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(sys_.dim()); }

 private:
  const BondSystem& sys_;
  double beta_;
  std::uint64_t seed_;
  std::vector<GateSum> ops_;
  double scale_;
};

McEstimate summarize(const Moments& m, std::size_t samples, std::uint64_t seed) {
  McEstimate est;
  const double count = static_cast<double>(samples);
  est.mean = m.sum / count;
  est.entry_variance = ((m.sum_sq - count * est.mean.cwiseAbs2()) / (count - 1.0)).cwiseMax(0.0);
  est.std_error = std::sqrt(est.entry_variance.sum() / count);
  est.samples = samples;
  est.seed = seed;
  return est;
}

struct BlockResult {
  Moments total;
  // Prefix sums at checkpoints falling strictly inside the block.
  std::vector<std::pair<std::size_t, Moments>> prefixes;
};

std::vector<McEstimate> run_estimator(const BondSystem& sys, double beta, std::size_t samples, std::uint64_t seed,
                                      std::span<const std::size_t> checkpoints) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ArgumentError("mc_estimate: beta must be finite and >= 0");
  if (samples < 2) throw ArgumentError("mc_estimate: need at least 2 samples");
  if (samples > kMaxMcSamples) throw SizeLimitError("mc_estimate: sample count exceeds the overflow guard");
  for (std::size_t c : checkpoints) {
    if (c < 2 || c > samples) throw ArgumentError("mc_estimate: checkpoint outside [2, samples]");
  }
  for (std::size_t b = 0; b < sys.bonds().size(); ++b) (void)bond_operator_sum(sys, b);

  std::vector<std::size_t> marks(checkpoints.begin(), checkpoints.end());
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  const Sampler sampler(sys, beta, seed);
  const std::size_t n_blocks = (samples + kBlockSize - 1) / kBlockSize;
  const std::size_t n_threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n_blocks));

  auto run_block = [&](std::size_t block) {
    BlockResult r{Moments(sampler.dim()), {}};
    std::vector<std::pair<std::uint64_t, Complex>> scratch;
    const std::size_t begin = block * kBlockSize;
    const std::size_t end = std::min(samples, begin + kBlockSize);
    auto mark = std::upper_bound(marks.begin(), marks.end(), begin);
    for (std::size_t i = begin; i < end; ++i) {
      sampler.add_sample(i, r.total, scratch);
      if (mark != marks.end() && *mark == i + 1 && i + 1 < end) {
        r.prefixes.emplace_back(i + 1, r.total);
        ++mark;
      }
    }
    return r;
  };

  std::vector<McEstimate> out;
  Moments running(sampler.dim());
  std::size_t done = 0;
  auto mark = marks.begin();
  for (std::size_t wave = 0; wave < n_blocks; wave += n_threads) {
    const std::size_t count = std::min(n_threads, n_blocks - wave);
    std::vector<BlockResult> results;
    results.reserve(count);
    for (std::size_t t = 0; t < count; ++t) results.push_back(BlockResult{Moments(sampler.dim()), {}});
    {
      std::vector<std::jthread> workers;
      for (std::size_t t = 1; t < count; ++t) {
        workers.emplace_back([&, t] { results[t] = run_block(wave + t); });
      }
      results[0] = run_block(wave);
    }
    // Reduce in block order so the result is independent of thread count.
    for (auto& r : results) {
      for (auto& [at, prefix] : r.prefixes) {
        Moments partial = running;
        partial += prefix;
        out.push_back(summarize(partial, at, seed));
        ++mark;
      }
      running += r.total;
      done = std::min(samples, done + kBlockSize);
      if (mark != marks.end() && *mark == done) {
        if (done != samples) out.push_back(summarize(running, done, seed));
        ++mark;
      }
    }
  }
  out.push_back(summarize(running, samples, seed));
  return out;
}

}  // namespace

McEstimate mc_estimate(const BondSystem& sys, double beta, std::size_t samples, std::uint64_t seed) {
  return run_estimator(sys, beta, samples, seed, {}).back();
}

std::vector<McEstimate> mc_estimate_trace(const BondSystem& sys, double beta, std::size_t samples,
                                          std::uint64_t seed, std::span<const std::size_t> checkpoints) {
  return run_estimator(sys, beta, samples, seed, checkpoints);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t count_loops(const Configuration& omega, const BondSystem& sys) {
  omega.check_bonds(sys);
  const auto n_sites = sys.site_count();

  // Cuts per site, in time order.
  std::vector<std::size_t> cuts(n_sites, 0);
  for (const auto& e : omega.events()) {
    const auto& bond = sys.bond(e.bond);
    if (bond.sites.size() != 2 || std::max(bond.sites[0], bond.sites[1]) != std::min(bond.sites[0], bond.sites[1]) + 1) {
      throw UnsupportedGeometry("count_loops: bond " + std::to_string(e.bond) + " is not a nearest-neighbour chain bond");
    }
    if (bond.kind == BondKind::custom) {
      throw UnsupportedGeometry("count_loops: bond " + std::to_string(e.bond) + " has a custom operator");
    }
    ++cuts[bond.sites[0]];
    ++cuts[bond.sites[1]];
  }

  // Site s carries cuts[s] + 1 world-line segments; segment k lies between cut k-1 and cut k.
  std::vector<std::size_t> offset(n_sites + 1, 0);
  for (std::size_t s = 0; s < n_sites; ++s) offset[s + 1] = offset[s] + cuts[s] + 1;
  const std::size_t n_segments = offset[n_sites];

  DisjointSets sets(n_segments);
  std::vector<std::size_t> seen(n_sites, 0);
  for (const auto& e : omega.events()) {
    const auto& bond = sys.bond(e.bond);
    const auto a = std::min(bond.sites[0], bond.sites[1]);
    const auto b = a + 1;
    const auto below_a = offset[a] + seen[a];
    const auto below_b = offset[b] + seen[b];
    const auto above_a = below_a + 1;
    const auto above_b = below_b + 1;
    if (bond.kind == BondKind::antiferro) {
      sets.unite(below_a, below_b);
      sets.unite(above_a, above_b);
    } else {
      // Exchange: each world line continues on the other site.
      sets.unite(below_a, above_b);
      sets.unite(below_b, above_a);
    }
    ++seen[a];
    ++seen[b];
  }

  std::vector<bool> open(n_segments, false);
  for (std::size_t s = 0; s < n_sites; ++s) {
    open[sets.find(offset[s])] = true;
    open[sets.find(offset[s + 1] - 1)] = true;
  }
  std::size_t loops = 0;
  for (std::size_t x = 0; x < n_segments; ++x) {
    if (sets.find(x) == x && !open[x]) ++loops;
  }
  return loops;
}

}  // namespace logicint
