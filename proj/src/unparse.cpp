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

#include "ducut/unparse.hpp"

#include <sstream>

#include "ducut/errors.hpp"

namespace ducut {

namespace {

// Binding strength used for minimal parenthesization. Assignments are the
// loosest, primaries and postfix forms the tightest.
int precedence(const Ast& ast, NodeId id) {
  const AstNode& n = ast.node(id);
  switch (n.kind) {
    case NodeKind::Assign: return 1;
    case NodeKind::BinaryOp: {
      const std::string& op = n.text;
      if (op == "||") return 2;
      if (op == "&&") return 3;
      if (op == "==" || op == "!=") return 4;
      if (op == "<" || op == "<=" || op == ">" || op == ">=") return 5;
      if (op == "+" || op == "-") return 6;
      return 7;  // * / %
    }
    case NodeKind::UnaryOp: return 8;
    default: return 10;
  }
}

class Writer {
 public:
  explicit Writer(const Ast& ast) : ast_(ast) {}

  std::string run() {
    NodeId root = ast_.root();
    bool first = true;
    for (NodeId item : ast_.retained_children(root)) {
      if (!first) out_ << "\n";
      first = false;
      emit_top_level(item);
    }
    return out_.str();
  }

 private:
  [[noreturn]] void missing(NodeId id, const char* what) {
    throw UnparseError(std::string("retained ") + node_kind_name(ast_.node(id).kind) +
                       " node " + std::to_string(id) + " lost its " + what);
  }

  // A mandatory child slot: deleted or never present -> UnparseError.
  NodeId required_child(NodeId id, std::size_t index, const char* what) {
    const AstNode& n = ast_.node(id);
    if (index >= n.children.size() || ast_.is_deleted(n.children[index])) {
      missing(id, what);
    }
    return n.children[index];
  }

  void indent(int level) {
    for (int i = 0; i < level; ++i) out_ << "    ";
  }

  void emit_top_level(NodeId id) {
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case NodeKind::FunctionDef:
        if (n.is_extern) {
          out_ << "extern int " << n.symbol << "();\n";
        } else {
          emit_function(id);
        }
        break;
      case NodeKind::VarDecl:
        emit_var_decl(id, 0);
        break;
      default:
        throw UnparseError(std::string("unexpected top-level ") +
                           node_kind_name(n.kind));
    }
  }

  void emit_function(NodeId id) {
    const AstNode& n = ast_.node(id);
    out_ << "int " << n.symbol << "(";
    bool first = true;
    NodeId body = kNoNode;
    for (NodeId c : ast_.retained_children(id)) {
      if (ast_.node(c).kind == NodeKind::ParamDecl) {
        if (!first) out_ << ", ";
        first = false;
        out_ << "int " << ast_.node(c).symbol;
      } else {
        body = c;
      }
    }
    out_ << ") ";
    if (body == kNoNode) missing(id, "body");
    emit_block(body, 0);
    out_ << "\n";
  }

  void emit_block(NodeId id, int level) {
    out_ << "{\n";
    for (NodeId s : ast_.retained_children(id)) emit_statement(s, level + 1);
    indent(level);
    out_ << "}";
  }

  // Emits a control-statement body: blocks stay on the header line, a single
  // statement moves to the next line one level deeper. Returns true when the
  // current output line is still open (a closing brace was just written).
  bool emit_body(NodeId id, int level) {
    if (ast_.node(id).kind == NodeKind::CompoundStmt) {
      out_ << " ";
      emit_block(id, level);
      return true;
    }
    out_ << "\n";
    emit_statement(id, level + 1);
    return false;
  }

  void emit_var_decl(NodeId id, int level) {
    const AstNode& n = ast_.node(id);
    indent(level);
    out_ << "int " << n.symbol;
    if (n.is_array) {
      NodeId size = required_child(id, 0, "array size");
      out_ << "[" << ast_.node(size).text << "]";
    } else {
      std::vector<NodeId> kids = ast_.retained_children(id);
      if (!kids.empty()) {
        out_ << " = ";
        emit_expr(kids[0], 0);
      }
    }
    out_ << ";\n";
  }

  void emit_statement(NodeId id, int level) {
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case NodeKind::VarDecl:
        emit_var_decl(id, level);
        return;
      case NodeKind::CompoundStmt:
        indent(level);
        emit_block(id, level);
        out_ << "\n";
        return;
      case NodeKind::ExprStmt: {
        indent(level);
        std::vector<NodeId> kids = ast_.retained_children(id);
        if (kids.empty()) missing(id, "expression");
        emit_expr(kids[0], 0);
        out_ << ";\n";
        return;
      }
      case NodeKind::ReturnStmt: {
        indent(level);
        std::vector<NodeId> kids = ast_.retained_children(id);
        out_ << "return";
        if (!kids.empty()) {
          out_ << " ";
          emit_expr(kids[0], 0);
        }
        out_ << ";\n";
        return;
      }
      case NodeKind::IfStmt:
        indent(level);
        if (emit_if(id, level)) out_ << "\n";
        return;
      case NodeKind::WhileStmt: {
        indent(level);
        out_ << "while (";
        emit_expr(required_child(id, 0, "condition"), 0);
        out_ << ")";
        if (emit_body(required_child(id, 1, "body"), level)) out_ << "\n";
        return;
      }
      case NodeKind::ForStmt: {
        indent(level);
        out_ << "for (";
        emit_expr(required_child(id, 0, "init clause"), 0);
        out_ << "; ";
        emit_expr(required_child(id, 1, "condition"), 0);
        out_ << "; ";
        emit_expr(required_child(id, 2, "step clause"), 0);
        out_ << ")";
        if (emit_body(required_child(id, 3, "body"), level)) out_ << "\n";
        return;
      }
      default:
        throw UnparseError(std::string("unexpected statement kind ") +
                           node_kind_name(n.kind));
    }
  }

  // Emitted without the leading indent so else-if chains can continue the
  // line. Returns true when the output line is still open.
  bool emit_if(NodeId id, int level) {
    out_ << "if (";
    emit_expr(required_child(id, 0, "condition"), 0);
    out_ << ")";
    NodeId then = required_child(id, 1, "then branch");
    bool then_block = ast_.node(then).kind == NodeKind::CompoundStmt;
    if (then_block) {
      out_ << " ";
      emit_block(then, level);
    } else {
      out_ << "\n";
      emit_statement(then, level + 1);
    }

    const AstNode& n = ast_.node(id);
    NodeId els = kNoNode;
    if (n.children.size() == 3 && !ast_.is_deleted(n.children[2])) els = n.children[2];
    if (els == kNoNode) return then_block;

    if (then_block) {
      out_ << " else";
    } else {
      indent(level);
      out_ << "else";
    }
    const AstNode& e = ast_.node(els);
    if (e.kind == NodeKind::IfStmt) {
      out_ << " ";
      return emit_if(els, level);
    }
    if (e.kind == NodeKind::CompoundStmt) {
      out_ << " ";
      emit_block(els, level);
      return true;
    }
    out_ << "\n";
    emit_statement(els, level + 1);
    return false;
  }

  void emit_expr(NodeId id, int context) {
    const AstNode& n = ast_.node(id);
    int prec = precedence(ast_, id);
    bool parens = prec < context;
    if (parens) out_ << "(";
    switch (n.kind) {
      case NodeKind::IntLiteral:
      case NodeKind::StringLiteral:
        out_ << n.text;
        break;
      case NodeKind::VarRef:
        out_ << n.symbol;
        break;
      case NodeKind::Assign:
        emit_expr(required_child(id, 0, "assignment target"), 10);
        out_ << " = ";
        emit_expr(required_child(id, 1, "assigned value"), 1);
        break;
      case NodeKind::BinaryOp:
        emit_expr(required_child(id, 0, "left operand"), prec);
        out_ << " " << n.text << " ";
        emit_expr(required_child(id, 1, "right operand"), prec + 1);
        break;
      case NodeKind::UnaryOp:
        out_ << n.text;
        emit_expr(required_child(id, 0, "operand"), prec);
        break;
      case NodeKind::Call: {
        out_ << n.symbol << "(";
        bool first = true;
        for (NodeId a : ast_.retained_children(id)) {
          if (!first) out_ << ", ";
          first = false;
          emit_expr(a, 0);
        }
        out_ << ")";
        break;
      }
      case NodeKind::ArrayIndex:
        emit_expr(required_child(id, 0, "array"), 9);
        out_ << "[";
        emit_expr(required_child(id, 1, "index"), 0);
        out_ << "]";
        break;
      default:
        throw UnparseError(std::string("unexpected expression kind ") +
                           node_kind_name(n.kind));
    }
    if (parens) out_ << ")";
  }

  const Ast& ast_;
  std::ostringstream out_;
};

}  // namespace

std::string unparse(const Ast& ast) { return Writer(ast).run(); }

}  // namespace ducut
