// Copyright 2026 The Ducut Authors
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

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ducut/dataflow.hpp"
#include "ducut/oracle.hpp"

namespace ducut {

enum class QAction { Attempt, Skip };

/// Discretized features of a candidate unit. 4 kinds x 8 size buckets x
/// 4 depth buckets x 3 failure buckets = 384 states.
struct QState {
  UnitKind kind = UnitKind::StmtSubtree;
  int size_bucket = 0;   // floor(log2(token_size + 1)) clamped to [0, 7]
  int depth_bucket = 0;  // min(depth, 3)
  int fail_bucket = 0;   // prior failure rate of the kind: <25%, 25-75%, >75%

  auto operator<=>(const QState&) const = default;
};

/// Attempt/failure tallies per unit kind for the current run; the source of
/// the fail_bucket feature.
struct RunStats {
  struct KindTally {
    std::int64_t attempts = 0;
    std::int64_t fails = 0;
  };
  std::map<UnitKind, KindTally> per_kind;

  void record(UnitKind kind, bool failed) {
    KindTally& t = per_kind[kind];
    ++t.attempts;
    if (failed) ++t.fails;
  }

  double failure_rate(UnitKind kind) const {
    auto it = per_kind.find(kind);
    if (it == per_kind.end() || it->second.attempts == 0) return 0.0;
    return static_cast<double>(it->second.fails) /
           static_cast<double>(it->second.attempts);
  }
};

QState featurize(const RemovalUnit& unit, const RunStats& stats);

/// Q(s,a) <- Q(s,a) + alpha * (r + gamma * max_next - Q(s,a)).
inline double bellman_update(double q, double alpha, double gamma, double r,
                             double max_next) {
  return q + alpha * (r + gamma * max_next - q);
}

/// Pass: fraction of the program removed, in (0, 1]. Fail or timeout: a
/// fixed attempt cost. Skipping is free.
double reward_for(const OracleVerdict& verdict, int tokens_removed,
                  int total_tokens);
inline double skip_reward() { return 0.0; }

/// Tabular action values with an epsilon-greedy candidate ordering policy.
/// Missing entries read as zero. All randomness flows through one counted
/// generator so a (seed, draws) pair pins the exact stream position.
class QTable {
 public:
  QTable(double alpha, double gamma, double epsilon, std::uint64_t seed);

  double value(const QState& s, QAction a) const;
  std::size_t entry_count() const { return entries_.size(); }

  /// Applies the Bellman update; `next` empty marks a terminal decision
  /// (max term 0). Returns the updated value.
  double update(const QState& s, QAction a, double reward,
                const std::optional<QState>& next);

  /// Greedy-by-gap ordering: each step picks the unit maximizing
  /// Q(s, Attempt) - Q(s, Skip) with ascending-id tiebreak, except that
  /// with probability epsilon the step picks uniformly from the remainder.
  std::vector<RemovalUnit> order_candidates(std::vector<RemovalUnit> units,
                                            const RunStats& stats);

  void decay_epsilon() { epsilon_ *= 0.95; }

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double epsilon() const { return epsilon_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  /// Versioned JSON persistence. load(save(t)) == t, including the
  /// hyperparameters and the generator position.
  void save(const std::string& path) const;
  static QTable load(const std::string& path);

  bool operator==(const QTable& other) const;

 private:
  double draw_unit_interval();
  std::size_t draw_index(std::size_t n);

  double alpha_;
  double gamma_;
  double epsilon_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 rng_;
  std::map<std::pair<QState, QAction>, double> entries_;
};

}  // namespace ducut
