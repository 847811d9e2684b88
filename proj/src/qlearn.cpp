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

#include "ducut/qlearn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ducut/errors.hpp"

namespace ducut {

using json = nlohmann::json;

QState featurize(const RemovalUnit& unit, const RunStats& stats) {
  QState s;
  s.kind = unit.kind;

  unsigned value = static_cast<unsigned>(unit.token_size) + 1u;
  int bucket = 0;
  while (value >>= 1u) ++bucket;
  s.size_bucket = std::min(bucket, 7);

  s.depth_bucket = std::min(unit.depth, 3);

  double rate = stats.failure_rate(unit.kind);
  s.fail_bucket = rate < 0.25 ? 0 : (rate <= 0.75 ? 1 : 2);
  return s;
}

double reward_for(const OracleVerdict& verdict, int tokens_removed,
                  int total_tokens) {
  if (verdict.pass()) {
    return static_cast<double>(tokens_removed) /
           static_cast<double>(total_tokens);
  }
  return -0.1;
}

QTable::QTable(double alpha, double gamma, double epsilon, std::uint64_t seed)
    : alpha_(alpha), gamma_(gamma), epsilon_(epsilon), seed_(seed), rng_(seed) {}

double QTable::value(const QState& s, QAction a) const {
  auto it = entries_.find({s, a});
  return it == entries_.end() ? 0.0 : it->second;
}

double QTable::update(const QState& s, QAction a, double reward,
                      const std::optional<QState>& next) {
  double max_next = 0.0;
  if (next) {
    max_next = std::max(value(*next, QAction::Attempt),
                        value(*next, QAction::Skip));
  }
  double updated = bellman_update(value(s, a), alpha_, gamma_, reward, max_next);
  entries_[{s, a}] = updated;
  return updated;
}

double QTable::draw_unit_interval() {
  ++draws_;
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::size_t QTable::draw_index(std::size_t n) {
  ++draws_;
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng_()) * n) >> 64);
}

std::vector<RemovalUnit> QTable::order_candidates(std::vector<RemovalUnit> units,
                                                  const RunStats& stats) {
  std::vector<RemovalUnit> ordered;
  ordered.reserve(units.size());
  while (!units.empty()) {
    std::size_t pick;
    if (units.size() > 1 && epsilon_ > 0.0 &&
        draw_unit_interval() < epsilon_) {
      pick = draw_index(units.size());
    } else {
      pick = 0;
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < units.size(); ++i) {
        QState s = featurize(units[i], stats);
        double gap = value(s, QAction::Attempt) - value(s, QAction::Skip);
        if (gap > best || (gap == best && units[i].id < units[pick].id)) {
          best = gap;
          pick = i;
        }
      }
    }
    ordered.push_back(units[static_cast<std::size_t>(pick)]);
    units.erase(units.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return ordered;
}

namespace {

const char* action_name(QAction a) {
  return a == QAction::Attempt ? "attempt" : "skip";
}

UnitKind unit_kind_from_name(const std::string& name) {
  if (name == "Function") return UnitKind::Function;
  if (name == "GlobalVar") return UnitKind::GlobalVar;
  if (name == "LocalVar") return UnitKind::LocalVar;
  if (name == "StmtSubtree") return UnitKind::StmtSubtree;
  throw FormatError("unknown unit kind '" + name + "'");
}

}  // namespace

void QTable::save(const std::string& path) const {
  json entries = json::array();
  for (const auto& [key, value] : entries_) {
    const QState& s = key.first;
    entries.push_back({{"kind", unit_kind_name(s.kind)},
                       {"size_bucket", s.size_bucket},
                       {"depth_bucket", s.depth_bucket},
                       {"fail_bucket", s.fail_bucket},
                       {"action", action_name(key.second)},
                       {"value", value}});
  }
  json doc = {{"version", 1}, {"alpha", alpha_},   {"gamma", gamma_},
              {"epsilon", epsilon_}, {"seed", seed_}, {"draws", draws_},
              {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw IoError("cannot write Q-table file '" + path + "'");
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("failed writing Q-table file '" + path + "'");
}

QTable QTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read Q-table file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FormatError("malformed Q-table file '" + path + "': " + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) {
      throw FormatError("unsupported Q-table version in '" + path + "'");
    }
    QTable table(doc.at("alpha").get<double>(), doc.at("gamma").get<double>(),
                 doc.at("epsilon").get<double>(),
                 doc.at("seed").get<std::uint64_t>());
    std::uint64_t draws = doc.at("draws").get<std::uint64_t>();
    table.rng_.discard(draws);
    table.draws_ = draws;
    for (const json& e : doc.at("entries")) {
      QState s;
      s.kind = unit_kind_from_name(e.at("kind").get<std::string>());
      s.size_bucket = e.at("size_bucket").get<int>();
      s.depth_bucket = e.at("depth_bucket").get<int>();
      s.fail_bucket = e.at("fail_bucket").get<int>();
      QAction a = e.at("action").get<std::string>() == "attempt"
                      ? QAction::Attempt
                      : QAction::Skip;
      table.entries_[{s, a}] = e.at("value").get<double>();
    }
    return table;
  } catch (const json::exception& e) {
    throw FormatError("malformed Q-table file '" + path + "': " + e.what());
  }
}

bool QTable::operator==(const QTable& other) const {
  return alpha_ == other.alpha_ && gamma_ == other.gamma_ &&
         epsilon_ == other.epsilon_ && seed_ == other.seed_ &&
         draws_ == other.draws_ && entries_ == other.entries_;
}

}  // namespace ducut
