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

#include "ducut/ast.hpp"

#include <algorithm>

#include "ducut/errors.hpp"

namespace ducut {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::TranslationUnit: return "TranslationUnit";
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::ParamDecl: return "ParamDecl";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::CompoundStmt: return "CompoundStmt";
    case NodeKind::IfStmt: return "IfStmt";
    case NodeKind::WhileStmt: return "WhileStmt";
    case NodeKind::ForStmt: return "ForStmt";
    case NodeKind::ReturnStmt: return "ReturnStmt";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::Assign: return "Assign";
    case NodeKind::BinaryOp: return "BinaryOp";
    case NodeKind::UnaryOp: return "UnaryOp";
    case NodeKind::Call: return "Call";
    case NodeKind::VarRef: return "VarRef";
    case NodeKind::ArrayIndex: return "ArrayIndex";
    case NodeKind::IntLiteral: return "IntLiteral";
    case NodeKind::StringLiteral: return "StringLiteral";
  }
  return "?";
}

NodeId Ast::add_node(AstNode node) {
  NodeId id = static_cast<NodeId>(nodes_.size());
  node.id = id;
  nodes_.push_back(std::move(node));
  return id;
}

void Ast::finalize() {
  parents_.assign(nodes_.size(), kNoNode);
  for (const AstNode& n : nodes_) {
    for (NodeId c : n.children) parents_[static_cast<size_t>(c)] = n.id;
  }
}

std::vector<NodeId> Ast::retained_children(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId c : node(id).children) {
    if (!is_deleted(c)) out.push_back(c);
  }
  return out;
}

int Ast::token_count(NodeId id) const {
  if (is_deleted(id)) return 0;
  int total = node(id).own_tokens;
  for (NodeId c : node(id).children) {
    if (!is_deleted(c)) total += token_count(c);
  }
  return total;
}

int Ast::retained_statement_count() const {
  int count = 0;
  for (const AstNode& n : nodes_) {
    if (is_deleted(n.id)) continue;
    switch (n.kind) {
      case NodeKind::VarDecl:
      case NodeKind::ExprStmt:
      case NodeKind::IfStmt:
      case NodeKind::WhileStmt:
      case NodeKind::ForStmt:
      case NodeKind::ReturnStmt:
        ++count;
        break;
      default:
        break;
    }
  }
  return count;
}

int Ast::depth(NodeId id) const {
  int d = 0;
  for (NodeId p = parent(id); p != kNoNode; p = parent(p)) ++d;
  return d;
}

std::vector<NodeId> Ast::subtree(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack = {id};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    out.push_back(n);
    for (NodeId c : node(n).children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_removable_child_position(const Ast& ast, NodeId child) {
  NodeId p = ast.parent(child);
  if (p == kNoNode) return false;  // the root itself
  const AstNode& parent = ast.node(p);
  switch (parent.kind) {
    case NodeKind::TranslationUnit:
    case NodeKind::CompoundStmt:
      return true;
    case NodeKind::Call:
      return true;  // argument list
    case NodeKind::IfStmt:
      // [cond, then, else?] - only the else branch is optional.
      return parent.children.size() == 3 && parent.children[2] == child;
    case NodeKind::ReturnStmt:
      return true;  // `return;` stays valid
    case NodeKind::VarDecl:
      // The initializer may go; an array size may not.
      return !parent.is_array;
    default:
      return false;
  }
}

Ast Ast::with_deleted(const std::set<NodeId>& subtree_roots) const {
  // Drop roots covered by another root's subtree, then validate positions.
  std::set<NodeId> roots;
  for (NodeId r : subtree_roots) {
    if (is_deleted(r)) continue;
    bool covered = false;
    for (NodeId p = parent(r); p != kNoNode; p = parent(p)) {
      if (subtree_roots.count(p) || is_deleted(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) roots.insert(r);
  }

  Ast out = *this;
  for (NodeId r : roots) {
    if (!is_removable_child_position(*this, r)) {
      throw StructureError("removal of node " + std::to_string(r) + " (" +
                           node_kind_name(node(r).kind) +
                           ") orphans a mandatory child position");
    }
    for (NodeId n : subtree(r)) out.deleted_.insert(n);
  }
  return out;
}

Ast delete_units(const Ast& ast, const std::vector<std::set<NodeId>>& units) {
  std::set<NodeId> roots;
  for (const auto& unit : units) roots.insert(unit.begin(), unit.end());
  return ast.with_deleted(roots);
}

namespace {

bool isomorphic_at(const Ast& a, NodeId na, const Ast& b, NodeId nb) {
  const AstNode& x = a.node(na);
  const AstNode& y = b.node(nb);
  if (x.kind != y.kind || x.symbol != y.symbol || x.text != y.text ||
      x.is_array != y.is_array || x.is_extern != y.is_extern) {
    return false;
  }
  std::vector<NodeId> ca = a.retained_children(na);
  std::vector<NodeId> cb = b.retained_children(nb);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!isomorphic_at(a, ca[i], b, cb[i])) return false;
  }
  return true;
}

}  // namespace

bool Ast::isomorphic(const Ast& a, const Ast& b) {
  if (a.root() == kNoNode || b.root() == kNoNode) return a.root() == b.root();
  return isomorphic_at(a, a.root(), b, b.root());
}

}  // namespace ducut
