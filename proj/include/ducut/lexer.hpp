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

#include <string>
#include <vector>

namespace ducut {

enum class TokenKind {
  Identifier,
  IntLiteral,
  StringLiteral,
  Keyword,   // int extern if else while for return
  Reserved,  // recognized C keyword outside the subset
  Punct,     // operators and separators
  Eof,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;  // 1-based
  int col = 1;   // 1-based
};

/// Tokenizes a pre-expanded C-subset source string. Skips // and /* */
/// comments. Throws ParseError on stray characters, unterminated strings
/// or comments, and preprocessor lines. The trailing Eof token is not
/// counted by callers that measure token totals.
std::vector<Token> lex(const std::string& text);

}  // namespace ducut
