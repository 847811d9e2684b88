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

#include "ducut/resolve.hpp"

#include "ducut/errors.hpp"

namespace ducut {

namespace {

class Resolver {
 public:
  explicit Resolver(const Ast& ast) : ast_(ast) {}

  Resolution run() {
    res_.scope_names.push_back("global");

    const AstNode& root = ast_.node(ast_.root());
    for (NodeId item : root.children) {
      const AstNode& n = ast_.node(item);
      if (n.kind == NodeKind::VarDecl) {
        res_.global_vars.push_back(item);
        res_.decl_scope[item] = 0;
        if (!globals_.count(n.symbol)) globals_[n.symbol] = item;
      } else if (n.kind == NodeKind::FunctionDef) {
        if (n.is_extern) {
          res_.extern_decls.push_back(item);
          if (!externs_.count(n.symbol)) externs_[n.symbol] = item;
        } else {
          res_.function_defs.push_back(item);
          if (!functions_.count(n.symbol)) functions_[n.symbol] = item;
          if (n.symbol == "main") res_.main_fn = item;
        }
      }
    }

    for (NodeId fn : res_.function_defs) resolve_function(fn);
    return std::move(res_);
  }

 private:
  struct ScopeFrame {
    int id;
    std::map<std::string, NodeId> names;
  };

  int new_scope(const std::string& name) {
    res_.scope_names.push_back(name);
    return static_cast<int>(res_.scope_names.size() - 1);
  }

  NodeId lookup(const std::string& name) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      auto hit = it->names.find(name);
      if (hit != it->names.end()) return hit->second;
    }
    auto g = globals_.find(name);
    return g == globals_.end() ? kNoNode : g->second;
  }

  void resolve_function(NodeId fn) {
    const AstNode& f = ast_.node(fn);
    current_fn_ = fn;
    block_counter_ = 0;

    ScopeFrame params;
    params.id = new_scope("fn:" + f.symbol);
    NodeId body = kNoNode;
    for (NodeId c : f.children) {
      const AstNode& n = ast_.node(c);
      if (n.kind == NodeKind::ParamDecl) {
        params.names[n.symbol] = c;
        res_.decl_scope[c] = params.id;
        res_.enclosing_fn[c] = fn;
      } else {
        body = c;
      }
    }
    stack_.push_back(std::move(params));
    if (body != kNoNode) resolve_block(body);
    stack_.pop_back();
  }

  void resolve_block(NodeId block) {
    ScopeFrame frame;
    frame.id = new_scope(res_.scope_names[stack_.back().id] + "/b" +
                         std::to_string(block_counter_++));
    stack_.push_back(std::move(frame));
    for (NodeId s : ast_.node(block).children) resolve_statement(s);
    stack_.pop_back();
  }

  void resolve_statement(NodeId id) {
    const AstNode& n = ast_.node(id);
    res_.enclosing_fn[id] = current_fn_;
    switch (n.kind) {
      case NodeKind::VarDecl:
        // The declarator is in scope inside its own initializer.
        stack_.back().names[n.symbol] = id;
        res_.decl_scope[id] = stack_.back().id;
        for (NodeId c : n.children) resolve_expr(c);
        return;
      case NodeKind::CompoundStmt:
        resolve_block(id);
        return;
      case NodeKind::IfStmt:
      case NodeKind::WhileStmt:
        resolve_expr(n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          resolve_statement(n.children[i]);
        }
        return;
      case NodeKind::ForStmt:
        resolve_expr(n.children[0]);
        resolve_expr(n.children[1]);
        resolve_expr(n.children[2]);
        resolve_statement(n.children[3]);
        return;
      case NodeKind::ExprStmt:
      case NodeKind::ReturnStmt:
        for (NodeId c : n.children) resolve_expr(c);
        return;
      default:
        return;
    }
  }

  void resolve_expr(NodeId id) {
    const AstNode& n = ast_.node(id);
    res_.enclosing_fn[id] = current_fn_;
    if (n.kind == NodeKind::VarRef) {
      NodeId decl = lookup(n.symbol);
      if (decl == kNoNode) {
        throw UnresolvedSymbol(n.symbol, n.span.begin_line, n.span.begin_col);
      }
      res_.ref_decl[id] = decl;
      return;
    }
    if (n.kind == NodeKind::Call) {
      auto def = functions_.find(n.symbol);
      NodeId target = def != functions_.end() ? def->second : kNoNode;
      if (target == kNoNode) {
        auto ext = externs_.find(n.symbol);
        if (ext != externs_.end()) target = ext->second;
      }
      if (target == kNoNode) {
        throw UnresolvedSymbol(n.symbol, n.span.begin_line, n.span.begin_col);
      }
      res_.call_target[id] = target;
      res_.calls_in[current_fn_].push_back(id);
    }
    for (NodeId c : n.children) resolve_expr(c);
  }

  const Ast& ast_;
  Resolution res_;
  std::map<std::string, NodeId> globals_;
  std::map<std::string, NodeId> functions_;
  std::map<std::string, NodeId> externs_;
  std::vector<ScopeFrame> stack_;
  NodeId current_fn_ = kNoNode;
  int block_counter_ = 0;
};

}  // namespace

Resolution resolve(const Ast& ast) { return Resolver(ast).run(); }

}  // namespace ducut
