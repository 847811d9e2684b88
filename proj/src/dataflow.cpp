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

#include "ducut/dataflow.hpp"

#include <algorithm>

#include "ducut/errors.hpp"

namespace ducut {

const char* unit_kind_name(UnitKind kind) {
  switch (kind) {
    case UnitKind::Function: return "Function";
    case UnitKind::GlobalVar: return "GlobalVar";
    case UnitKind::LocalVar: return "LocalVar";
    case UnitKind::StmtSubtree: return "StmtSubtree";
  }
  return "?";
}

namespace {

void apply_transfer(const CfgStmt& s, DefSet& defs) {
  for (const CfgDef& d : s.gens) {
    if (d.strong) {
      for (auto it = defs.begin(); it != defs.end();) {
        it = (it->first == d.decl) ? defs.erase(it) : std::next(it);
      }
    }
  }
  for (const CfgDef& d : s.gens) defs.insert({d.decl, d.site});
}

}  // namespace

std::map<NodeId, DefSet> reaching_definitions(const Cfg& cfg) {
  std::size_t n = cfg.blocks.size();
  std::vector<DefSet> in(n), out(n);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      DefSet next_out = in[b];
      for (const CfgStmt& s : cfg.blocks[b].stmts) apply_transfer(s, next_out);
      if (next_out != out[b]) {
        out[b] = std::move(next_out);
        changed = true;
      }
      for (int succ : cfg.blocks[b].succs) {
        auto idx = static_cast<std::size_t>(succ);
        std::size_t before = in[idx].size();
        in[idx].insert(out[b].begin(), out[b].end());
        if (in[idx].size() != before) changed = true;
      }
    }
  }

  std::map<NodeId, DefSet> at_stmt;
  for (std::size_t b = 0; b < n; ++b) {
    DefSet defs = in[b];
    for (const CfgStmt& s : cfg.blocks[b].stmts) {
      at_stmt[s.anchor] = defs;
      apply_transfer(s, defs);
    }
  }
  return at_stmt;
}

namespace {

struct Analysis {
  std::vector<DuViolation> violations;
  std::map<std::pair<NodeId, NodeId>, std::set<std::pair<NodeId, NodeId>>> chains;
};

// One pass over every retained function: reference/call liveness against the
// deleted set, then reaching definitions with global entry defs and call mod
// effects. Fills both the violation list and the def-use chains so the
// consistency check and chain computation cannot drift apart.
Analysis analyze(const Ast& ast, const Resolution& res) {
  Analysis result;

  for (const auto& [ref, decl] : res.ref_decl) {
    if (ast.is_deleted(ref)) continue;
    if (ast.is_deleted(decl)) {
      result.violations.push_back({DuViolation::Kind::DeletedDecl, ref, ref,
                                   ast.node(ref).symbol});
    }
  }
  for (const auto& [call, target] : res.call_target) {
    if (ast.is_deleted(call)) continue;
    if (ast.is_deleted(target)) {
      result.violations.push_back({DuViolation::Kind::DeletedCallee, call, call,
                                   ast.node(call).symbol});
    }
  }

  ModSets mods = compute_mod_sets(ast, res);
  CfgOptions opt;
  opt.globals_at_entry = true;
  opt.mod_sets = &mods;

  for (NodeId fn : res.function_defs) {
    if (ast.is_deleted(fn)) continue;
    Cfg cfg = build_cfg(ast, res, fn, opt);
    std::map<NodeId, DefSet> reach = reaching_definitions(cfg);

    for (const BasicBlock& block : cfg.blocks) {
      for (const CfgStmt& s : block.stmts) {
        const DefSet& defs = reach.at(s.anchor);
        for (const CfgDef& d : s.gens) result.chains[{d.decl, d.site}];
        for (const CfgUse& u : s.uses) {
          bool reached = false;
          for (const auto& [decl, site] : defs) {
            if (decl == u.decl) {
              result.chains[{decl, site}].insert({s.anchor, u.ref});
              reached = true;
            }
          }
          if (!reached && !ast.is_deleted(u.decl)) {
            // Deleted decls are already reported above; this catches uses
            // that lost every def while their declaration survived.
            result.violations.push_back({DuViolation::Kind::NoReachingDef,
                                         u.ref, s.anchor,
                                         ast.node(u.ref).symbol});
          }
        }
      }
    }
  }

  std::sort(result.violations.begin(), result.violations.end(),
            [](const DuViolation& a, const DuViolation& b) {
              return a.node < b.node;
            });
  return result;
}

}  // namespace

std::vector<DuChain> compute_du_chains(const Ast& ast, const Resolution& res) {
  for (const auto& [ref, decl] : res.ref_decl) {
    if (!ast.is_deleted(ref) && ast.is_deleted(decl)) {
      const AstNode& n = ast.node(ref);
      throw UnresolvedSymbol(n.symbol, n.span.begin_line, n.span.begin_col);
    }
  }
  Analysis a = analyze(ast, res);
  std::vector<DuChain> chains;
  chains.reserve(a.chains.size());
  for (const auto& [key, uses] : a.chains) {
    chains.push_back({key.first, key.second, uses});
  }
  return chains;
}

std::vector<DuChain> compute_du_chains(const Ast& ast) {
  Resolution res = resolve(ast);
  return compute_du_chains(ast, res);
}

ConsistencyReport check_du_consistency(const Ast& ast, const Resolution& res) {
  return {analyze(ast, res).violations};
}

ConsistencyReport check_du_consistency(const Ast& ast) {
  Resolution res = resolve(ast);
  return check_du_consistency(ast, res);
}

namespace {

// Nearest ancestor sitting in a statement list; the smallest thing the
// closure may pull in on behalf of a node inside it.
NodeId enclosing_removable_statement(const Ast& ast, NodeId id) {
  NodeId cur = id;
  while (ast.parent(cur) != kNoNode) {
    NodeKind pk = ast.node(ast.parent(cur)).kind;
    if (pk == NodeKind::CompoundStmt || pk == NodeKind::TranslationUnit) {
      return cur;
    }
    cur = ast.parent(cur);
  }
  throw InternalError("no removable statement encloses node " +
                      std::to_string(id));
}

}  // namespace

RemovalUnit du_closure(const Ast& ast, const Resolution& res,
                       const std::set<NodeId>& seed) {
  RemovalUnit unit;
  if (seed.empty()) return unit;

  unit.anchor = *seed.begin();
  const AstNode& anchor = ast.node(unit.anchor);
  if (seed.size() == 1 && anchor.kind == NodeKind::FunctionDef) {
    unit.kind = UnitKind::Function;
  } else if (seed.size() == 1 && anchor.kind == NodeKind::VarDecl) {
    int scope = res.decl_scope.count(unit.anchor)
                    ? res.decl_scope.at(unit.anchor)
                    : 0;
    unit.kind = scope == 0 ? UnitKind::GlobalVar : UnitKind::LocalVar;
  } else {
    unit.kind = UnitKind::StmtSubtree;
  }
  unit.depth = ast.depth(unit.anchor);

  std::set<NodeId> roots = seed;
  while (true) {
    if (res.main_fn != kNoNode && roots.count(res.main_fn)) {
      throw ClosureExplosion("closure of unit anchored at node " +
                             std::to_string(unit.anchor) +
                             " reaches the entry function");
    }
    Ast candidate = ast.with_deleted(roots);  // validates syntax closure
    Analysis a = analyze(candidate, res);
    if (a.violations.empty()) break;
    bool grew = false;
    for (const DuViolation& v : a.violations) {
      NodeId stmt = enclosing_removable_statement(ast, v.node);
      if (roots.insert(stmt).second) grew = true;
    }
    if (!grew) {
      throw InternalError("du_closure failed to make progress");
    }
  }

  // Normalize: drop roots covered by another root or already deleted.
  for (NodeId r : roots) {
    if (ast.is_deleted(r)) continue;
    bool covered = false;
    for (NodeId p = ast.parent(r); p != kNoNode; p = ast.parent(p)) {
      if (roots.count(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) unit.nodes.push_back(r);
  }
  std::sort(unit.nodes.begin(), unit.nodes.end());
  for (NodeId r : unit.nodes) unit.token_size += ast.token_count(r);
  return unit;
}

}  // namespace ducut
