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

#include "ducut/ast.hpp"

namespace ducut {

/// Parses a pre-expanded C-subset source string into an arena Ast.
///
/// The subset covers: int scalars and one-dimensional int arrays, functions
/// with int parameters, extern function declarations with empty parameter
/// lists, if/else, while, for (all three clauses required), return,
/// expression statements, blocks, assignments (including array element
/// assignment), the usual arithmetic / comparison / logical operators,
/// calls, and string literals in call-argument position only.
///
/// Node ids are assigned in pre-order and never reused. Every lexical token
/// is attributed to exactly one node, so the root's token count equals the
/// lexer's total. Throws ParseError for anything outside the subset.
Ast parse_source(const std::string& text);

}  // namespace ducut
