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
#include <string>
#include <vector>

#include "ducut/ast.hpp"

namespace ducut {

/// A declared name. Identity is the declaring node; (name, scope) is unique.
struct Symbol {
  std::string name;
  int scope = 0;  // 0 = global
  NodeId decl_node = kNoNode;
};

/// Name bindings over the full arena. Bindings depend only on the parsed
/// tree, never on the deleted set, so one Resolution serves every candidate
/// derived from the same parse: removals are constrained to never change
/// what a retained reference binds to.
struct Resolution {
  std::map<NodeId, NodeId> ref_decl;     // VarRef -> VarDecl/ParamDecl
  std::map<NodeId, NodeId> call_target;  // Call -> FunctionDef (def or extern)
  std::map<NodeId, int> decl_scope;      // declaring node -> scope id
  std::vector<std::string> scope_names;  // scope id -> display name
  std::vector<NodeId> function_defs;     // FunctionDefs with bodies, id order
  std::vector<NodeId> extern_decls;      // extern FunctionDefs, id order
  std::vector<NodeId> global_vars;       // file-scope VarDecls, id order
  NodeId main_fn = kNoNode;
  std::map<NodeId, std::vector<NodeId>> calls_in;  // function -> Call nodes
  std::map<NodeId, NodeId> enclosing_fn;           // any node -> FunctionDef

  Symbol symbol_of(const Ast& ast, NodeId decl) const {
    auto it = decl_scope.find(decl);
    return Symbol{ast.node(decl).symbol, it == decl_scope.end() ? 0 : it->second,
                  decl};
  }
};

/// Binds every VarRef and Call in the arena. Locals follow C scoping (a
/// declaration is visible from its own initializer to the end of the
/// enclosing block, shadowing outer names); globals and functions are
/// file-scope and order-independent. Throws UnresolvedSymbol for names
/// with no declaration.
Resolution resolve(const Ast& ast);

}  // namespace ducut
