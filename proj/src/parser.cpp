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

#include "ducut/parser.hpp"

#include <functional>

#include "ducut/errors.hpp"
#include "ducut/lexer.hpp"

namespace ducut {

namespace {

// Nodes are built bottom-up while parsing expressions, then renumbered into
// the arena in pre-order. tok_begin/tok_end give the half-open token range a
// subtree covers; a node's own tokens are its range minus its children's.
struct TempNode {
  NodeKind kind = NodeKind::TranslationUnit;
  std::vector<int> children;
  std::string symbol;
  std::string text;
  bool is_array = false;
  bool is_extern = false;
  int tok_begin = 0;
  int tok_end = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Ast run() {
    int tu = make(NodeKind::TranslationUnit, pos_);
    while (!at_eof()) {
      append_child(tu, parse_external_decl());
    }
    close(tu);
    return renumber(tu);
  }

 private:
  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + static_cast<std::size_t>(ahead);
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_eof() const { return peek().kind == TokenKind::Eof; }
  bool at_punct(const char* p) const {
    return peek().kind == TokenKind::Punct && peek().text == p;
  }
  bool at_keyword(const char* k) const {
    return peek().kind == TokenKind::Keyword && peek().text == k;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().line, peek().col, msg);
  }

  void reject_reserved() const {
    if (peek().kind == TokenKind::Reserved) {
      fail("'" + peek().text + "' is outside the supported C subset");
    }
  }

  std::string describe_current() const {
    if (peek().kind == TokenKind::Eof) return "end of input";
    return "'" + peek().text + "'";
  }

  const Token& take() {
    const Token& t = peek();
    if (t.kind != TokenKind::Eof) ++pos_;
    return t;
  }

  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(std::string("expected '") + p + "', found " + describe_current());
    ++pos_;
  }
  void expect_keyword(const char* k) {
    if (!at_keyword(k)) fail(std::string("expected '") + k + "', found " + describe_current());
    ++pos_;
  }
  std::string expect_identifier() {
    reject_reserved();
    if (peek().kind != TokenKind::Identifier) {
      fail("expected identifier, found " + describe_current());
    }
    return take().text;
  }

  int make(NodeKind kind, std::size_t begin) {
    TempNode n;
    n.kind = kind;
    n.tok_begin = static_cast<int>(begin);
    temp_.push_back(std::move(n));
    return static_cast<int>(temp_.size() - 1);
  }
  void close(int id) { temp_[id].tok_end = static_cast<int>(pos_); }
  // temp_ may reallocate while the child parses; index it only after.
  void append_child(int owner, int child) {
    temp_[static_cast<std::size_t>(owner)].children.push_back(child);
  }

  // --- declarations -----------------------------------------------------

  int parse_external_decl() {
    reject_reserved();
    if (at_keyword("extern")) return parse_extern_decl();
    if (at_keyword("int")) {
      if (peek(1).kind == TokenKind::Identifier &&
          peek(2).kind == TokenKind::Punct && peek(2).text == "(") {
        return parse_function_def();
      }
      int decl = parse_var_decl();
      for (int c : temp_[decl].children) {
        if (contains_non_constant(c)) {
          const Token& at = toks_[static_cast<std::size_t>(temp_[decl].tok_begin)];
          throw ParseError(at.line, at.col,
                           "global initializers must be constant expressions");
        }
      }
      return decl;
    }
    fail("expected declaration, found " + describe_current());
  }

  bool contains_non_constant(int t) const {
    const TempNode& n = temp_[static_cast<std::size_t>(t)];
    if (n.kind == NodeKind::VarRef || n.kind == NodeKind::Call ||
        n.kind == NodeKind::Assign) {
      return true;
    }
    for (int c : n.children) {
      if (contains_non_constant(c)) return true;
    }
    return false;
  }

  int parse_extern_decl() {
    int id = make(NodeKind::FunctionDef, pos_);
    expect_keyword("extern");
    expect_keyword("int");
    temp_[id].symbol = expect_identifier();
    temp_[id].is_extern = true;
    expect_punct("(");
    if (!at_punct(")")) {
      fail("extern declarations take an empty parameter list");
    }
    expect_punct(")");
    expect_punct(";");
    close(id);
    return id;
  }

  int parse_function_def() {
    int id = make(NodeKind::FunctionDef, pos_);
    expect_keyword("int");
    temp_[id].symbol = expect_identifier();
    expect_punct("(");
    if (!at_punct(")")) {
      while (true) {
        int p = make(NodeKind::ParamDecl, pos_);
        expect_keyword("int");
        temp_[p].symbol = expect_identifier();
        close(p);
        temp_[id].children.push_back(p);
        if (at_punct(",")) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    if (!at_punct("{")) fail("expected function body, found " + describe_current());
    append_child(id, parse_compound());
    close(id);
    return id;
  }

  int parse_var_decl() {
    int id = make(NodeKind::VarDecl, pos_);
    expect_keyword("int");
    temp_[id].symbol = expect_identifier();
    if (at_punct("[")) {
      ++pos_;
      if (peek().kind != TokenKind::IntLiteral) {
        fail("expected integer array size, found " + describe_current());
      }
      int size = make(NodeKind::IntLiteral, pos_);
      temp_[size].text = take().text;
      close(size);
      temp_[id].children.push_back(size);
      temp_[id].is_array = true;
      expect_punct("]");
      if (at_punct("=")) fail("array initializers are not supported");
    } else if (at_punct("=")) {
      std::size_t eq = pos_;
      ++pos_;
      int init = parse_expr();
      // The '=' goes with the initializer: deleting the initializer slot
      // then accounts for exactly the tokens that disappear from the text.
      temp_[init].tok_begin = static_cast<int>(eq);
      append_child(id, init);
    }
    expect_punct(";");
    close(id);
    return id;
  }

  // --- statements ---------------------------------------------------------

  int parse_compound() {
    int id = make(NodeKind::CompoundStmt, pos_);
    expect_punct("{");
    while (!at_punct("}")) {
      if (at_eof()) fail("expected '}', found end of input");
      append_child(id, parse_statement());
    }
    expect_punct("}");
    close(id);
    return id;
  }

  int parse_statement() {
    reject_reserved();
    if (at_keyword("int")) return parse_var_decl();
    if (at_punct("{")) return parse_compound();
    if (at_keyword("if")) return parse_if();
    if (at_keyword("while")) return parse_while();
    if (at_keyword("for")) return parse_for();
    if (at_keyword("return")) return parse_return();
    if (at_keyword("extern")) fail("extern declarations are only allowed at file scope");

    int id = make(NodeKind::ExprStmt, pos_);
    append_child(id, parse_expr());
    expect_punct(";");
    close(id);
    return id;
  }

  int parse_if() {
    int id = make(NodeKind::IfStmt, pos_);
    expect_keyword("if");
    expect_punct("(");
    append_child(id, parse_expr());
    expect_punct(")");
    append_child(id, parse_statement());
    if (at_keyword("else")) {
      std::size_t else_tok = pos_;
      ++pos_;
      int branch = parse_statement();
      temp_[branch].tok_begin = static_cast<int>(else_tok);  // owns 'else'
      append_child(id, branch);
    }
    close(id);
    return id;
  }

  int parse_while() {
    int id = make(NodeKind::WhileStmt, pos_);
    expect_keyword("while");
    expect_punct("(");
    append_child(id, parse_expr());
    expect_punct(")");
    append_child(id, parse_statement());
    close(id);
    return id;
  }

  int parse_for() {
    int id = make(NodeKind::ForStmt, pos_);
    expect_keyword("for");
    expect_punct("(");
    append_child(id, parse_expr());
    expect_punct(";");
    append_child(id, parse_expr());
    expect_punct(";");
    append_child(id, parse_expr());
    expect_punct(")");
    append_child(id, parse_statement());
    close(id);
    return id;
  }

  int parse_return() {
    int id = make(NodeKind::ReturnStmt, pos_);
    expect_keyword("return");
    if (!at_punct(";")) {
      append_child(id, parse_expr());
    }
    expect_punct(";");
    close(id);
    return id;
  }

  // --- expressions ----------------------------------------------------------
  //
  // expr        := or ('=' expr)?        assignment requires an lvalue
  // or          := and ('||' and)*
  // and         := eq ('&&' eq)*
  // eq          := rel (('=='|'!=') rel)*
  // rel         := add (('<'|'<='|'>'|'>=') add)*
  // add         := mul (('+'|'-') mul)*
  // mul         := unary (('*'|'/'|'%') unary)*
  // unary       := ('!'|'-') unary | postfix
  // postfix     := primary ('[' expr ']')*
  // primary     := IntLit | ident | ident '(' args ')' | '(' expr ')'

  int parse_expr() {
    int lhs = parse_binary(1);
    if (at_punct("=")) {
      NodeKind k = temp_[lhs].kind;
      if (k != NodeKind::VarRef && k != NodeKind::ArrayIndex) {
        fail("invalid assignment target");
      }
      int id = make(NodeKind::Assign, static_cast<std::size_t>(temp_[lhs].tok_begin));
      ++pos_;  // '='
      int rhs = parse_expr();
      temp_[id].children = {lhs, rhs};
      close(id);
      return id;
    }
    return lhs;
  }

  static int binary_level(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
    if (op == "+" || op == "-") return 5;
    if (op == "*" || op == "/" || op == "%") return 6;
    return -1;
  }

  int parse_binary(int min_level) {
    int lhs = (min_level >= 7) ? parse_unary() : parse_binary(min_level + 1);
    while (peek().kind == TokenKind::Punct && binary_level(peek().text) == min_level) {
      std::string op = take().text;
      int rhs = (min_level >= 6) ? parse_unary() : parse_binary(min_level + 1);
      int id = make(NodeKind::BinaryOp, static_cast<std::size_t>(temp_[lhs].tok_begin));
      temp_[id].text = op;
      temp_[id].children = {lhs, rhs};
      close(id);
      lhs = id;
    }
    return lhs;
  }

  int parse_unary() {
    if (at_punct("!") || at_punct("-")) {
      int id = make(NodeKind::UnaryOp, pos_);
      temp_[id].text = take().text;
      append_child(id, parse_unary());
      close(id);
      return id;
    }
    if (at_punct("*") || at_punct("&")) {
      fail("pointers are outside the supported C subset");
    }
    return parse_postfix();
  }

  int parse_postfix() {
    int base = parse_primary();
    while (at_punct("[")) {
      if (temp_[base].kind != NodeKind::VarRef) {
        fail("only named arrays can be indexed");
      }
      int id = make(NodeKind::ArrayIndex, static_cast<std::size_t>(temp_[base].tok_begin));
      ++pos_;  // '['
      int index = parse_expr();
      expect_punct("]");
      temp_[id].children = {base, index};
      close(id);
      base = id;
    }
    return base;
  }

  int parse_primary() {
    reject_reserved();
    if (peek().kind == TokenKind::IntLiteral) {
      int id = make(NodeKind::IntLiteral, pos_);
      temp_[id].text = take().text;
      close(id);
      return id;
    }
    if (peek().kind == TokenKind::StringLiteral) {
      fail("string literals are only allowed as call arguments");
    }
    if (peek().kind == TokenKind::Identifier) {
      if (peek(1).kind == TokenKind::Punct && peek(1).text == "(") {
        int id = make(NodeKind::Call, pos_);
        temp_[id].symbol = take().text;
        ++pos_;  // '('
        if (!at_punct(")")) {
          while (true) {
            append_child(id, parse_call_arg());
            if (at_punct(",")) {
              ++pos_;
              continue;
            }
            break;
          }
        }
        expect_punct(")");
        close(id);
        return id;
      }
      int id = make(NodeKind::VarRef, pos_);
      temp_[id].symbol = take().text;
      close(id);
      return id;
    }
    if (at_punct("(")) {
      std::size_t lparen = pos_;
      ++pos_;
      int inner = parse_expr();
      expect_punct(")");
      // Fold the parentheses into the inner node's range so every token
      // stays attributed to exactly one node.
      temp_[inner].tok_begin = static_cast<int>(lparen);
      temp_[inner].tok_end = static_cast<int>(pos_);
      return inner;
    }
    fail("expected expression, found " + describe_current());
  }

  int parse_call_arg() {
    if (peek().kind == TokenKind::StringLiteral) {
      int id = make(NodeKind::StringLiteral, pos_);
      temp_[id].text = take().text;
      close(id);
      return id;
    }
    return parse_expr();
  }

  // --- arena construction -----------------------------------------------

  Ast renumber(int temp_root) {
    Ast ast;
    std::function<NodeId(int)> emit = [&](int t) -> NodeId {
      const TempNode& src = temp_[t];
      AstNode n;
      n.kind = src.kind;
      n.symbol = src.symbol;
      n.text = src.text;
      n.is_array = src.is_array;
      n.is_extern = src.is_extern;
      int child_tokens = 0;
      for (int c : src.children) child_tokens += temp_[c].tok_end - temp_[c].tok_begin;
      n.own_tokens = (src.tok_end - src.tok_begin) - child_tokens;
      if (src.tok_end > src.tok_begin) {
        const Token& first = toks_[static_cast<std::size_t>(src.tok_begin)];
        const Token& last = toks_[static_cast<std::size_t>(src.tok_end - 1)];
        n.span = {first.line, first.col, last.line,
                  last.col + static_cast<int>(last.text.size())};
      }
      NodeId id = ast.add_node(std::move(n));
      std::vector<NodeId> kids;
      kids.reserve(src.children.size());
      for (int c : src.children) kids.push_back(emit(c));
      ast.mutable_node(id).children = std::move(kids);
      return id;
    };
    NodeId root = emit(temp_root);
    ast.set_root(root);
    ast.finalize();
    return ast;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<TempNode> temp_;
};

}  // namespace

Ast parse_source(const std::string& text) { return Parser(text).run(); }

}  // namespace ducut
