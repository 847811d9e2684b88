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

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ducut/ast.hpp"
#include "ducut/resolve.hpp"

namespace ducut {

/// A definition generated by a statement. `site` is the statement anchor
/// that owns the def. Strong defs kill every other site of the same decl;
/// weak defs (array writes, call effects on globals) do not.
struct CfgDef {
  NodeId decl;
  NodeId site;
  bool strong;
};

struct CfgUse {
  NodeId decl;
  NodeId ref;  // the VarRef node
};

/// One dataflow statement. The anchor is the AST node the statement stands
/// for: a declaration, expression/return statement, the condition-owning
/// control node, a for clause, or a parameter/global pseudo-def at entry.
struct CfgStmt {
  NodeId anchor;
  std::vector<CfgDef> gens;
  std::vector<CfgUse> uses;
};

struct BasicBlock {
  std::vector<CfgStmt> stmts;
  std::vector<int> succs;
  bool unreachable = false;
};

struct Cfg {
  NodeId function = kNoNode;
  std::vector<BasicBlock> blocks;
  int entry = 0;
  int exit = 0;

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int s : blocks[b].succs) out.emplace_back(static_cast<int>(b), s);
    }
    return out;
  }
};

/// Per-function sets of global definitions a call may perform:
/// function -> global decl -> def anchor sites within the callee closure.
using ModSets = std::map<NodeId, std::map<NodeId, std::set<NodeId>>>;

/// Transitive "assigns these globals" sets over the retained call graph.
ModSets compute_mod_sets(const Ast& ast, const Resolution& res);

struct CfgOptions {
  /// Add a pseudo def of every retained global at function entry. The
  /// declaration is the def site, matching C's static initialization.
  bool globals_at_entry = false;
  /// When set, a call also (weakly) gens the callee closure's global defs.
  const ModSets* mod_sets = nullptr;
};

/// Builds the control-flow graph of one retained function over retained
/// statements. Parameters become strong pseudo-defs in the entry block.
/// if/else and loops produce the textbook diamond and back-edge shapes; a
/// sink exit block is materialized only when return statements need one.
Cfg build_cfg(const Ast& ast, const Resolution& res, NodeId function,
              const CfgOptions& options = {});

}  // namespace ducut
