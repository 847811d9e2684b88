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

#include "ducut/cfg.hpp"

#include <deque>

#include "ducut/errors.hpp"

namespace ducut {

namespace {

// Collects the defs and uses of an expression into `stmt`. `anchor` is the
// statement the effects belong to. Assignment targets are defs (weak for
// array elements), everything else read is a use; calls inject the callee
// closure's global def sites when mod sets are supplied.
void walk_expr(const Ast& ast, const Resolution& res, const CfgOptions& opt,
               NodeId expr, CfgStmt& stmt) {
  const AstNode& n = ast.node(expr);
  switch (n.kind) {
    case NodeKind::Assign: {
      NodeId lhs = n.children[0];
      const AstNode& target = ast.node(lhs);
      if (target.kind == NodeKind::VarRef) {
        NodeId decl = res.ref_decl.at(lhs);
        stmt.gens.push_back({decl, stmt.anchor, !ast.node(decl).is_array});
      } else {  // ArrayIndex: a[i] = v defines a weakly and uses i
        NodeId base = ast.node(lhs).children[0];
        NodeId decl = res.ref_decl.at(base);
        stmt.gens.push_back({decl, stmt.anchor, false});
        walk_expr(ast, res, opt, ast.node(lhs).children[1], stmt);
      }
      walk_expr(ast, res, opt, n.children[1], stmt);
      return;
    }
    case NodeKind::VarRef:
      stmt.uses.push_back({res.ref_decl.at(expr), expr});
      return;
    case NodeKind::Call: {
      for (NodeId a : n.children) {
        if (!ast.is_deleted(a)) walk_expr(ast, res, opt, a, stmt);
      }
      if (opt.mod_sets != nullptr) {
        NodeId target = res.call_target.at(expr);
        auto mods = opt.mod_sets->find(target);
        if (mods != opt.mod_sets->end()) {
          for (const auto& [global, sites] : mods->second) {
            for (NodeId site : sites) stmt.gens.push_back({global, site, false});
          }
        }
      }
      return;
    }
    case NodeKind::ArrayIndex:
      walk_expr(ast, res, opt, n.children[0], stmt);
      walk_expr(ast, res, opt, n.children[1], stmt);
      return;
    case NodeKind::IntLiteral:
    case NodeKind::StringLiteral:
      return;
    default:
      for (NodeId c : n.children) {
        if (!ast.is_deleted(c)) walk_expr(ast, res, opt, c, stmt);
      }
      return;
  }
}

class Builder {
 public:
  Builder(const Ast& ast, const Resolution& res, const CfgOptions& opt)
      : ast_(ast), res_(res), opt_(opt) {}

  Cfg run(NodeId function) {
    cfg_.function = function;
    int cur = new_block();
    cfg_.entry = cur;

    if (opt_.globals_at_entry) {
      for (NodeId g : res_.global_vars) {
        if (ast_.is_deleted(g)) continue;
        CfgStmt pseudo{g, {{g, g, true}}, {}};
        cfg_.blocks[cur].stmts.push_back(std::move(pseudo));
      }
    }
    const AstNode& fn = ast_.node(function);
    NodeId body = kNoNode;
    for (NodeId c : fn.children) {
      if (ast_.node(c).kind == NodeKind::ParamDecl) {
        CfgStmt pseudo{c, {{c, c, true}}, {}};
        cfg_.blocks[cur].stmts.push_back(std::move(pseudo));
      } else {
        body = c;
      }
    }
    if (body != kNoNode) cur = visit_list(body, cur);

    if (!return_blocks_.empty()) {
      int sink = new_block();
      for (int b : return_blocks_) edge(b, sink);
      if (cur >= 0) edge(cur, sink);
      cfg_.exit = sink;
    } else {
      cfg_.exit = cur >= 0 ? cur : cfg_.entry;
    }
    mark_unreachable();
    return std::move(cfg_);
  }

 private:
  int new_block() {
    cfg_.blocks.emplace_back();
    return static_cast<int>(cfg_.blocks.size() - 1);
  }
  void edge(int from, int to) { cfg_.blocks[from].succs.push_back(to); }

  CfgStmt make_stmt(NodeId anchor, NodeId expr) {
    CfgStmt s;
    s.anchor = anchor;
    if (expr != kNoNode && !ast_.is_deleted(expr)) {
      walk_expr(ast_, res_, opt_, expr, s);
    }
    return s;
  }

  // Appends the statements of a compound to `cur`; returns the open block
  // at the end, or -1 when control cannot fall through (a return ended it).
  int visit_list(NodeId compound, int cur) {
    for (NodeId s : ast_.retained_children(compound)) {
      if (cur < 0) {
        // Code after a return: give it its own unconnected block so every
        // retained statement still lives in exactly one block.
        cur = new_block();
      }
      cur = visit_statement(s, cur);
    }
    return cur;
  }

  int visit_statement(NodeId id, int cur) {
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case NodeKind::VarDecl: {
        CfgStmt s = make_stmt(id, kNoNode);
        std::vector<NodeId> kids = ast_.retained_children(id);
        if (!kids.empty() && !n.is_array) walk_expr(ast_, res_, opt_, kids[0], s);
        s.gens.push_back({id, id, true});
        cfg_.blocks[cur].stmts.push_back(std::move(s));
        return cur;
      }
      case NodeKind::ExprStmt: {
        std::vector<NodeId> kids = ast_.retained_children(id);
        cfg_.blocks[cur].stmts.push_back(
            make_stmt(id, kids.empty() ? kNoNode : kids[0]));
        return cur;
      }
      case NodeKind::ReturnStmt: {
        std::vector<NodeId> kids = ast_.retained_children(id);
        cfg_.blocks[cur].stmts.push_back(
            make_stmt(id, kids.empty() ? kNoNode : kids[0]));
        return_blocks_.push_back(cur);
        return -1;
      }
      case NodeKind::CompoundStmt:
        return visit_list(id, cur);
      case NodeKind::IfStmt: {
        cfg_.blocks[cur].stmts.push_back(make_stmt(id, n.children[0]));
        int join = -1;
        auto join_block = [&]() {
          if (join < 0) join = new_block();
          return join;
        };
        int then_entry = new_block();
        edge(cur, then_entry);
        int then_exit = visit_statement(n.children[1], then_entry);
        if (then_exit >= 0) edge(then_exit, join_block());

        NodeId els = kNoNode;
        if (n.children.size() == 3 && !ast_.is_deleted(n.children[2])) {
          els = n.children[2];
        }
        if (els != kNoNode) {
          int else_entry = new_block();
          edge(cur, else_entry);
          int else_exit = visit_statement(els, else_entry);
          if (else_exit >= 0) edge(else_exit, join_block());
        } else {
          edge(cur, join_block());
        }
        return join;
      }
      case NodeKind::WhileStmt: {
        int header = new_block();
        edge(cur, header);
        cfg_.blocks[header].stmts.push_back(make_stmt(id, n.children[0]));
        int body_entry = new_block();
        edge(header, body_entry);
        int body_exit = visit_statement(n.children[1], body_entry);
        if (body_exit >= 0) edge(body_exit, header);
        int after = new_block();
        edge(header, after);
        return after;
      }
      case NodeKind::ForStmt: {
        cfg_.blocks[cur].stmts.push_back(make_stmt(n.children[0], n.children[0]));
        int header = new_block();
        edge(cur, header);
        cfg_.blocks[header].stmts.push_back(make_stmt(id, n.children[1]));
        int body_entry = new_block();
        edge(header, body_entry);
        int body_exit = visit_statement(n.children[3], body_entry);
        int latch = new_block();
        cfg_.blocks[latch].stmts.push_back(make_stmt(n.children[2], n.children[2]));
        if (body_exit >= 0) edge(body_exit, latch);
        edge(latch, header);
        int after = new_block();
        edge(header, after);
        return after;
      }
      default:
        throw InternalError(std::string("unexpected statement kind in CFG: ") +
                            node_kind_name(n.kind));
    }
  }

  void mark_unreachable() {
    std::vector<bool> seen(cfg_.blocks.size(), false);
    std::deque<int> work{cfg_.entry};
    seen[static_cast<std::size_t>(cfg_.entry)] = true;
    while (!work.empty()) {
      int b = work.front();
      work.pop_front();
      for (int s : cfg_.blocks[static_cast<std::size_t>(b)].succs) {
        if (!seen[static_cast<std::size_t>(s)]) {
          seen[static_cast<std::size_t>(s)] = true;
          work.push_back(s);
        }
      }
    }
    for (std::size_t b = 0; b < cfg_.blocks.size(); ++b) {
      cfg_.blocks[b].unreachable = !seen[b];
    }
  }

  const Ast& ast_;
  const Resolution& res_;
  const CfgOptions& opt_;
  Cfg cfg_;
  std::vector<int> return_blocks_;
};

}  // namespace

Cfg build_cfg(const Ast& ast, const Resolution& res, NodeId function,
              const CfgOptions& options) {
  if (ast.is_deleted(function) ||
      ast.node(function).kind != NodeKind::FunctionDef ||
      ast.node(function).is_extern) {
    throw InternalError("build_cfg requires a retained function definition");
  }
  return Builder(ast, res, options).run(function);
}

namespace {

// Direct (non-transitive) global assignments of one function, keyed by the
// global's decl, valued by the assigning statement anchors.
ModSets::mapped_type direct_global_defs(const Ast& ast, const Resolution& res,
                                        NodeId fn) {
  ModSets::mapped_type out;
  CfgOptions plain;  // no mod sets: only syntactic assignments
  Cfg cfg = build_cfg(ast, res, fn, plain);
  for (const BasicBlock& b : cfg.blocks) {
    for (const CfgStmt& s : b.stmts) {
      for (const CfgDef& d : s.gens) {
        const AstNode& decl = ast.node(d.decl);
        if (decl.kind == NodeKind::VarDecl &&
            res.decl_scope.count(d.decl) != 0 &&
            res.decl_scope.at(d.decl) == 0 && d.site != d.decl) {
          out[d.decl].insert(d.site);
        }
      }
    }
  }
  return out;
}

}  // namespace

ModSets compute_mod_sets(const Ast& ast, const Resolution& res) {
  ModSets mods;
  for (NodeId fn : res.function_defs) {
    if (!ast.is_deleted(fn)) mods[fn] = direct_global_defs(ast, res, fn);
  }

  // Retained call edges.
  std::map<NodeId, std::set<NodeId>> callees;
  for (const auto& [fn, calls] : res.calls_in) {
    if (ast.is_deleted(fn)) continue;
    for (NodeId call : calls) {
      if (ast.is_deleted(call)) continue;
      NodeId target = res.call_target.at(call);
      if (!ast.is_deleted(target) && !ast.node(target).is_extern) {
        callees[fn].insert(target);
      }
    }
  }

  // Propagate to a fixpoint; cycles (recursion) just stop adding.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [fn, mod] : mods) {
      auto edge_it = callees.find(fn);
      if (edge_it == callees.end()) continue;
      for (NodeId callee : edge_it->second) {
        for (const auto& [global, sites] : mods[callee]) {
          for (NodeId site : sites) {
            if (mod[global].insert(site).second) changed = true;
          }
        }
      }
    }
  }
  return mods;
}

}  // namespace ducut
