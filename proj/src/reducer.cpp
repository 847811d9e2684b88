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

#include "ducut/reducer.hpp"

#include <algorithm>

#include "ducut/unparse.hpp"

namespace ducut {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Ddmin: return "ddmin";
    case Mode::Hdd: return "hdd";
    case Mode::HddDu: return "hdd-du";
    case Mode::Rl: return "rl";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "ddmin") return Mode::Ddmin;
  if (name == "hdd") return Mode::Hdd;
  if (name == "hdd-du") return Mode::HddDu;
  if (name == "rl") return Mode::Rl;
  throw FormatError("unknown mode '" + name +
                    "' (expected ddmin, hdd, hdd-du, or rl)");
}

namespace {

// Statement nesting level: number of CompoundStmt ancestors. Function body
// statements sit at level 1.
int statement_level(const Ast& ast, NodeId id) {
  int level = 0;
  for (NodeId p = ast.parent(id); p != kNoNode; p = ast.parent(p)) {
    if (ast.node(p).kind == NodeKind::CompoundStmt) ++level;
  }
  return level;
}

// Anchors eligible at a level, ascending id. Level 0: non-main functions
// (including externs) and global declarations; level >= 1: retained
// statements in statement lists at that nesting depth, plus else branches
// (the one optional child slot a deletion can empty).
std::vector<NodeId> anchors_at_level(const Ast& ast, const Resolution& res,
                                     int level) {
  std::vector<NodeId> anchors;
  if (level == 0) {
    for (NodeId item : ast.retained_children(ast.root())) {
      const AstNode& n = ast.node(item);
      if (n.kind == NodeKind::FunctionDef && item != res.main_fn) {
        anchors.push_back(item);
      }
    }
    for (NodeId item : ast.retained_children(ast.root())) {
      if (ast.node(item).kind == NodeKind::VarDecl) anchors.push_back(item);
    }
    std::sort(anchors.begin(), anchors.end());
    return anchors;
  }
  for (NodeId id = 0; id < static_cast<NodeId>(ast.node_count()); ++id) {
    if (ast.is_deleted(id)) continue;
    NodeId parent = ast.parent(id);
    if (parent == kNoNode) continue;
    const AstNode& p = ast.node(parent);
    bool in_list = p.kind == NodeKind::CompoundStmt;
    bool else_branch = p.kind == NodeKind::IfStmt && p.children.size() == 3 &&
                       p.children[2] == id;
    if (!in_list && !else_branch) continue;
    if (statement_level(ast, id) == level) anchors.push_back(id);
  }
  return anchors;
}

void sort_and_number(std::vector<RemovalUnit>& units) {
  std::sort(units.begin(), units.end(),
            [](const RemovalUnit& a, const RemovalUnit& b) {
              if (a.token_size != b.token_size) {
                return a.token_size > b.token_size;
              }
              return a.anchor < b.anchor;
            });
  for (std::size_t i = 0; i < units.size(); ++i) {
    units[i].id = static_cast<int>(i);
  }
}

RemovalUnit raw_unit(const Ast& ast, const Resolution& res, NodeId anchor) {
  RemovalUnit unit;
  unit.anchor = anchor;
  unit.nodes = {anchor};
  unit.token_size = ast.token_count(anchor);
  unit.depth = ast.depth(anchor);
  const AstNode& n = ast.node(anchor);
  if (n.kind == NodeKind::FunctionDef) {
    unit.kind = UnitKind::Function;
  } else if (n.kind == NodeKind::VarDecl) {
    int scope =
        res.decl_scope.count(anchor) ? res.decl_scope.at(anchor) : 0;
    unit.kind = scope == 0 ? UnitKind::GlobalVar : UnitKind::LocalVar;
  } else {
    unit.kind = UnitKind::StmtSubtree;
  }
  return unit;
}

}  // namespace

int max_unit_level(const Ast& ast) {
  int deepest = 0;
  for (NodeId id = 0; id < static_cast<NodeId>(ast.node_count()); ++id) {
    if (ast.is_deleted(id)) continue;
    NodeId parent = ast.parent(id);
    if (parent == kNoNode) continue;
    const AstNode& p = ast.node(parent);
    bool in_list = p.kind == NodeKind::CompoundStmt;
    bool else_branch = p.kind == NodeKind::IfStmt && p.children.size() == 3 &&
                       p.children[2] == id;
    if (!in_list && !else_branch) continue;
    deepest = std::max(deepest, statement_level(ast, id));
  }
  return deepest;
}

std::vector<RemovalUnit> propose_units(const Ast& ast, const Resolution& res,
                                       int level) {
  std::vector<RemovalUnit> units;
  std::set<std::vector<NodeId>> seen;
  for (NodeId anchor : anchors_at_level(ast, res, level)) {
    RemovalUnit unit;
    try {
      unit = du_closure(ast, res, {anchor});
    } catch (const ClosureExplosion&) {
      continue;
    }
    if (unit.nodes.empty()) continue;
    if (!seen.insert(unit.nodes).second) continue;
    units.push_back(std::move(unit));
  }
  sort_and_number(units);
  return units;
}

std::vector<RemovalUnit> propose_raw_units(const Ast& ast,
                                           const Resolution& res, int level) {
  std::vector<RemovalUnit> units;
  for (NodeId anchor : anchors_at_level(ast, res, level)) {
    units.push_back(raw_unit(ast, res, anchor));
  }
  sort_and_number(units);
  return units;
}

std::vector<RemovalUnit> propose_flat_units(const Ast& ast,
                                            const Resolution& res) {
  std::vector<RemovalUnit> units;
  for (int level = 0; level <= max_unit_level(ast); ++level) {
    for (NodeId anchor : anchors_at_level(ast, res, level)) {
      units.push_back(raw_unit(ast, res, anchor));
    }
  }
  sort_and_number(units);
  return units;
}

namespace {

std::set<NodeId> union_roots(const std::vector<RemovalUnit>& units) {
  std::set<NodeId> roots;
  for (const RemovalUnit& u : units) roots.insert(u.nodes.begin(), u.nodes.end());
  return roots;
}

std::vector<int> unit_ids(const std::vector<RemovalUnit>& units) {
  std::vector<int> ids;
  ids.reserve(units.size());
  for (const RemovalUnit& u : units) ids.push_back(u.id);
  return ids;
}

// Units of `all` missing from `kept`, ascending id.
std::vector<RemovalUnit> removed_units(const std::vector<RemovalUnit>& all,
                                       const std::vector<RemovalUnit>& kept) {
  std::set<int> kept_ids;
  for (const RemovalUnit& u : kept) kept_ids.insert(u.id);
  std::vector<RemovalUnit> removed;
  for (const RemovalUnit& u : all) {
    if (!kept_ids.count(u.id)) removed.push_back(u);
  }
  std::sort(removed.begin(), removed.end(),
            [](const RemovalUnit& a, const RemovalUnit& b) { return a.id < b.id; });
  return removed;
}

class LevelReducer {
 public:
  LevelReducer(ReductionState& state, const ReducerContext& ctx, int level,
               std::vector<RemovalUnit> units)
      : state_(state), ctx_(ctx), level_(level), units_(std::move(units)) {}

  int run() {
    if (ctx_.trace) {
      for (const RemovalUnit& u : units_) ctx_.trace->propose(level_, u);
    }
    if (ctx_.mode == Mode::Rl && ctx_.agent) {
      units_ = ctx_.agent->order_candidates(std::move(units_), *ctx_.stats);
    }

    // Keeping everything must pass: that candidate is the current program,
    // already accepted, so this is a cache hit in steady state.
    if (!evaluate_keep(units_)) {
      throw PreconditionFailed("current program no longer passes the oracle");
    }

    FirstPassingProbe<RemovalUnit> probe =
        [this](const std::vector<std::vector<RemovalUnit>>& candidates)
        -> std::optional<std::size_t> { return first_passing(candidates); };
    std::vector<RemovalUnit> kept = ddmin_probe(units_, probe);

    std::vector<RemovalUnit> removed = removed_units(units_, kept);
    if (!removed.empty()) {
      std::set<NodeId> roots = union_roots(removed);
      int before = state_.ast.retained_token_count();
      state_.ast = state_.ast.with_deleted(roots);
      if (ctx_.trace) {
        ctx_.trace->commit(level_, unit_ids(removed),
                           {roots.begin(), roots.end()}, before,
                           state_.ast.retained_token_count());
      }
    }
    if (ctx_.mode == Mode::Rl && ctx_.agent) {
      std::vector<RemovalUnit> kept_by_id = kept;
      std::sort(kept_by_id.begin(), kept_by_id.end(),
                [](const RemovalUnit& a, const RemovalUnit& b) {
                  return a.id < b.id;
                });
      for (const RemovalUnit& u : kept_by_id) {
        ctx_.agent->update(featurize(u, *ctx_.stats), QAction::Skip,
                           skip_reward(), std::nullopt);
      }
    }
    return static_cast<int>(removed.size());
  }

 private:
  std::optional<std::size_t> first_passing(
      const std::vector<std::vector<RemovalUnit>>& candidates) {
    if (ctx_.jobs <= 1) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (evaluate_keep(candidates[i])) return i;
      }
      return std::nullopt;
    }
    // Batched: evaluate the whole round concurrently, then book-keep in
    // input order so traces and agent updates stay deterministic.
    std::vector<std::string> texts;
    std::vector<Ast> asts;
    texts.reserve(candidates.size());
    asts.reserve(candidates.size());
    for (const auto& kept : candidates) {
      Ast cand = candidate_ast(kept);
      texts.push_back(unparse(cand));
      asts.push_back(std::move(cand));
    }
    std::vector<OracleVerdict> verdicts =
        ctx_.oracle->evaluate_batch(texts, ctx_.jobs);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bookkeep(candidates[i], asts[i], verdicts[i]);
      if (!hit && verdicts[i].pass()) hit = i;
    }
    return hit;
  }

  Ast candidate_ast(const std::vector<RemovalUnit>& kept) {
    return state_.ast.with_deleted(union_roots(removed_units(units_, kept)));
  }

  bool evaluate_keep(const std::vector<RemovalUnit>& kept) {
    Ast cand = candidate_ast(kept);
    OracleVerdict verdict = ctx_.oracle->evaluate(unparse(cand));
    bookkeep(kept, cand, verdict);
    return verdict.pass();
  }

  void bookkeep(const std::vector<RemovalUnit>& kept, const Ast& cand,
                const OracleVerdict& verdict) {
    std::vector<RemovalUnit> removed = removed_units(units_, kept);
    std::set<NodeId> roots = union_roots(removed);
    int before = state_.ast.retained_token_count();
    int after = cand.retained_token_count();
    if (ctx_.trace) {
      ctx_.trace->attempt(level_, unit_ids(removed),
                          {roots.begin(), roots.end()}, verdict, before, after);
      if (!verdict.pass() && !removed.empty()) {
        ctx_.trace->revert(level_, unit_ids(removed));
      }
    }
    if (removed.empty()) return;

    // Featurize against the stats the ordering saw, then fold the outcome in.
    std::vector<QState> states;
    if (ctx_.mode == Mode::Rl && ctx_.agent) {
      states.reserve(removed.size());
      for (const RemovalUnit& u : removed) {
        states.push_back(featurize(u, *ctx_.stats));
      }
    }
    for (const RemovalUnit& u : removed) {
      ctx_.stats->record(u.kind, !verdict.pass());
    }
    if (ctx_.mode == Mode::Rl && ctx_.agent) {
      for (std::size_t i = 0; i < removed.size(); ++i) {
        double r = reward_for(verdict, removed[i].token_size, before);
        std::optional<QState> next;
        if (i + 1 < removed.size()) next = states[i + 1];
        ctx_.agent->update(states[i], QAction::Attempt, r, next);
      }
    }
  }

  ReductionState& state_;
  const ReducerContext& ctx_;
  int level_;
  std::vector<RemovalUnit> units_;
};

}  // namespace

int hdd_pass(ReductionState& state, const ReducerContext& ctx) {
  if (ctx.mode == Mode::Ddmin) {
    std::vector<RemovalUnit> units = propose_flat_units(state.ast, state.res);
    if (units.empty()) return 0;
    return LevelReducer(state, ctx, 0, std::move(units)).run();
  }

  int commits = 0;
  for (int level = 0; level <= max_unit_level(state.ast); ++level) {
    std::vector<RemovalUnit> units =
        ctx.mode == Mode::Hdd ? propose_raw_units(state.ast, state.res, level)
                              : propose_units(state.ast, state.res, level);
    if (units.empty()) continue;
    commits += LevelReducer(state, ctx, level, std::move(units)).run();
  }
  return commits;
}

MinimalityResult verify_one_du_minimality(const ReductionState& state,
                                          OracleRunner& oracle) {
  MinimalityResult result;
  std::set<std::vector<NodeId>> seen;
  for (int level = 0; level <= max_unit_level(state.ast); ++level) {
    for (const RemovalUnit& unit : propose_units(state.ast, state.res, level)) {
      if (!seen.insert(unit.nodes).second) continue;
      Ast cand = state.ast.with_deleted(
          {unit.nodes.begin(), unit.nodes.end()});
      if (oracle.evaluate(unparse(cand)).pass()) {
        result.witnesses.push_back(unit);
      }
    }
  }
  result.minimal = result.witnesses.empty();
  return result;
}

}  // namespace ducut
