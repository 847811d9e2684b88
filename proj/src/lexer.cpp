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

#include "ducut/lexer.hpp"

#include <array>
#include <cctype>

#include "ducut/errors.hpp"

namespace ducut {

namespace {

const std::array<const char*, 7> kKeywords = {
    "int", "extern", "if", "else", "while", "for", "return"};

// C keywords the subset deliberately rejects. Flagging them in the lexer
// lets the parser report the error at the offending token.
const std::array<const char*, 25> kReserved = {
    "auto",     "break",  "case",    "char",   "const",    "continue",
    "default",  "do",     "double",  "enum",   "float",    "goto",
    "long",     "register", "short", "signed", "sizeof",   "static",
    "struct",   "switch", "typedef", "union",  "unsigned", "void",
    "volatile"};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      throw ParseError(line, col, "preprocessor directives must be expanded before parsing");
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      int start_line = line, start_col = col;
      advance(2);
      while (true) {
        if (i + 1 >= text.size()) {
          throw ParseError(start_line, start_col, "unterminated block comment");
        }
        if (text[i] == '*' && text[i + 1] == '/') {
          advance(2);
          break;
        }
        advance(1);
      }
      continue;
    }

    Token tok;
    tok.line = line;
    tok.col = col;

    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      tok.text = text.substr(i, j - i);
      tok.kind = TokenKind::Identifier;
      for (const char* kw : kKeywords) {
        if (tok.text == kw) tok.kind = TokenKind::Keyword;
      }
      for (const char* kw : kReserved) {
        if (tok.text == kw) tok.kind = TokenKind::Reserved;
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && is_ident_start(text[j])) {
        throw ParseError(line, col, "malformed integer literal");
      }
      tok.text = text.substr(i, j - i);
      tok.kind = TokenKind::IntLiteral;
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }

    if (c == '"') {
      std::size_t j = i + 1;
      while (true) {
        if (j >= text.size() || text[j] == '\n') {
          throw ParseError(tok.line, tok.col, "unterminated string literal");
        }
        if (text[j] == '\\') {
          if (j + 1 >= text.size()) {
            throw ParseError(tok.line, tok.col, "unterminated string literal");
          }
          j += 2;
          continue;
        }
        if (text[j] == '"') break;
        ++j;
      }
      tok.text = text.substr(i, j - i + 1);  // raw, quotes included
      tok.kind = TokenKind::StringLiteral;
      advance(j - i + 1);
      out.push_back(std::move(tok));
      continue;
    }

    // Two-character operators take precedence over their prefixes.
    static const char* kTwoChar[] = {"==", "!=", "<=", ">=", "&&", "||"};
    bool matched = false;
    if (i + 1 < text.size()) {
      std::string two = text.substr(i, 2);
      for (const char* op : kTwoChar) {
        if (two == op) {
          tok.text = two;
          tok.kind = TokenKind::Punct;
          advance(2);
          out.push_back(std::move(tok));
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;

    static const std::string kSingle = "=+-*/%<>!(){}[];,";
    if (kSingle.find(c) != std::string::npos) {
      tok.text = std::string(1, c);
      tok.kind = TokenKind::Punct;
      advance(1);
      out.push_back(std::move(tok));
      continue;
    }

    throw ParseError(line, col, std::string("stray character '") + c + "'");
  }

  Token eof;
  eof.kind = TokenKind::Eof;
  eof.line = line;
  eof.col = col;
  out.push_back(std::move(eof));
  return out;
}

}  // namespace ducut
