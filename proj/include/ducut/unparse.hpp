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

/// Emits canonical source text for the retained tree: one statement per
/// line, four-space indents, minimal parentheses, a blank line between
/// top-level items. The output is a function of the retained tree only, so
/// isomorphic trees unparse to byte-identical text and the result reparses
/// to an isomorphic tree. Throws UnparseError when a retained node's
/// mandatory child (an if condition, a loop body, an operand) is deleted.
std::string unparse(const Ast& ast);

}  // namespace ducut
