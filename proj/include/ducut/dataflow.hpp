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
#include <string>
#include <utility>
#include <vector>

#include "ducut/ast.hpp"
#include "ducut/cfg.hpp"
#include "ducut/resolve.hpp"

namespace ducut {

/// (decl node, def site) pairs.
using DefSet = std::set<std::pair<NodeId, NodeId>>;

/// Classic forward may-analysis: least fixpoint of gen/kill over the block
/// graph, then a per-statement sweep. Returns the definitions reaching each
/// statement anchor's entry.
std::map<NodeId, DefSet> reaching_definitions(const Cfg& cfg);

/// One definition and every use it reaches without being redefined.
struct DuChain {
  NodeId decl;
  NodeId def_site;
  std::set<std::pair<NodeId, NodeId>> uses;  // (use anchor, VarRef)

  bool operator==(const DuChain&) const = default;
};

/// All def-use chains of the retained program. Global initializers count as
/// defs at a synthetic entry of every function; parameters as defs at their
/// function's entry; calls inject the callee closure's global def sites.
/// Throws UnresolvedSymbol when a retained reference binds to a deleted
/// declaration.
std::vector<DuChain> compute_du_chains(const Ast& ast, const Resolution& res);
std::vector<DuChain> compute_du_chains(const Ast& ast);

struct DuViolation {
  enum class Kind {
    DeletedDecl,    // retained reference to a deleted declaration
    NoReachingDef,  // retained use with an empty reaching set
    DeletedCallee,  // retained call to a deleted function
  };
  Kind kind;
  NodeId node;  // offending VarRef or Call
  NodeId stmt;  // its statement anchor
  std::string symbol;
};

struct ConsistencyReport {
  std::vector<DuViolation> violations;
  bool empty() const { return violations.empty(); }
};

/// Empty iff every retained use has a retained reaching definition and
/// every retained call targets a retained definition or extern declaration.
ConsistencyReport check_du_consistency(const Ast& ast, const Resolution& res);
ConsistencyReport check_du_consistency(const Ast& ast);

enum class UnitKind { Function, GlobalVar, LocalVar, StmtSubtree };

const char* unit_kind_name(UnitKind kind);

/// A DU- and syntax-closed set of subtrees removable atomically.
struct RemovalUnit {
  int id = -1;
  UnitKind kind = UnitKind::StmtSubtree;
  NodeId anchor = kNoNode;
  std::vector<NodeId> nodes;  // subtree roots, ascending, ancestor-free
  int token_size = 0;
  int depth = 0;
};

/// Least superset of `seed` whose removal leaves the program DU-consistent:
/// statements are pulled in while any retained use would lose its reaching
/// definitions, reference a deleted declaration, or call a deleted
/// function. Throws ClosureExplosion if the closure would swallow `main`,
/// StructureError if a seed root is not removable.
RemovalUnit du_closure(const Ast& ast, const Resolution& res,
                       const std::set<NodeId>& seed);

}  // namespace ducut
