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
#include <set>
#include <string>
#include <vector>

namespace ducut {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind : std::uint8_t {
  TranslationUnit,
  FunctionDef,
  ParamDecl,
  VarDecl,
  CompoundStmt,
  IfStmt,
  WhileStmt,
  ForStmt,
  ReturnStmt,
  ExprStmt,
  Assign,
  BinaryOp,
  UnaryOp,
  Call,
  VarRef,
  ArrayIndex,
  IntLiteral,
  StringLiteral,
};

const char* node_kind_name(NodeKind kind);

struct Span {
  int begin_line = 0;
  int begin_col = 0;
  int end_line = 0;
  int end_col = 0;
};

/// One arena slot. `symbol` is set exactly for FunctionDef, ParamDecl,
/// VarDecl, VarRef and Call nodes; `text` holds literal spellings and the
/// operator of BinaryOp/UnaryOp nodes. `own_tokens` counts the lexical
/// tokens this node covers excluding its children, so subtree sums equal
/// the lexer's totals.
struct AstNode {
  NodeId id = kNoNode;
  NodeKind kind = NodeKind::TranslationUnit;
  std::vector<NodeId> children;
  std::string symbol;
  std::string text;
  bool is_array = false;   // VarDecl of a one-dimensional array
  bool is_extern = false;  // FunctionDef without a body
  Span span;
  int own_tokens = 0;
};

/// Arena syntax tree with stable pre-order ids and a subtree-closed set of
/// deleted ids. All mutating operations return new values; an Ast is never
/// modified through a const reference held elsewhere.
class Ast {
 public:
  Ast() = default;

  // Construction (used by the parser).
  NodeId add_node(AstNode node);
  AstNode& mutable_node(NodeId id) { return nodes_[id]; }
  void set_root(NodeId id) { root_ = id; }
  void finalize();  // builds the parent map

  const AstNode& node(NodeId id) const { return nodes_[static_cast<size_t>(id)]; }
  NodeId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  NodeId parent(NodeId id) const { return parents_[static_cast<size_t>(id)]; }

  bool is_deleted(NodeId id) const { return deleted_.count(id) != 0; }
  const std::set<NodeId>& deleted() const { return deleted_; }

  /// Retained (non-deleted) children of a retained node, in child order.
  std::vector<NodeId> retained_children(NodeId id) const;

  /// Token count of the retained subtree rooted at `id`.
  int token_count(NodeId id) const;

  /// Token count of the whole retained tree.
  int retained_token_count() const { return token_count(root_); }

  /// Number of retained statement nodes (declarations, expression
  /// statements, control statements, returns).
  int retained_statement_count() const;

  /// Depth of a node (root = 0).
  int depth(NodeId id) const;

  /// All node ids in the subtree of `id`, including `id` itself.
  std::vector<NodeId> subtree(NodeId id) const;

  /// Returns a copy with every node of every given subtree added to the
  /// deleted set. Each root must sit in a removable position (a child of a
  /// statement list or an optional child slot) unless one of its ancestors
  /// is also being removed; otherwise throws StructureError. The input is
  /// left untouched.
  Ast with_deleted(const std::set<NodeId>& subtree_roots) const;

  /// True if the retained trees of `a` and `b` have the same shape, kinds,
  /// symbols, literals and flags. Ids, spans, and token counts are ignored.
  static bool isomorphic(const Ast& a, const Ast& b);

 private:
  std::vector<AstNode> nodes_;
  std::vector<NodeId> parents_;
  NodeId root_ = kNoNode;
  std::set<NodeId> deleted_;
};

/// Spec-level deletion entry point: removes each unit (a set of subtree
/// roots) from a copy of `ast`. Throws StructureError when a removal
/// orphans a mandatory child position.
Ast delete_units(const Ast& ast, const std::vector<std::set<NodeId>>& units);

/// True if a direct child of `parent_kind` at position `child_index` may be
/// deleted while the parent is retained.
bool is_removable_child_position(const Ast& ast, NodeId child);

}  // namespace ducut
