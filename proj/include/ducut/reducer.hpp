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

#include "ducut/ast.hpp"
#include "ducut/dataflow.hpp"
#include "ducut/ddmin.hpp"
#include "ducut/oracle.hpp"
#include "ducut/qlearn.hpp"
#include "ducut/resolve.hpp"
#include "ducut/trace.hpp"

namespace ducut {

enum class Mode { Ddmin, Hdd, HddDu, Rl };

const char* mode_name(Mode mode);
Mode parse_mode(const std::string& name);  // throws FormatError

/// Current accepted program plus the fixed full-arena resolution. The ast
/// only ever shrinks, and only through commits of oracle-passing removals.
struct ReductionState {
  Ast ast;
  Resolution res;
};

/// Deepest statement-list nesting over retained statements; level 0 holds
/// whole functions and globals.
int max_unit_level(const Ast& ast);

/// DU-closed candidate units at one level: whole non-main functions and
/// global declarations at level 0, statements at their nesting level above.
/// Units whose closure would swallow main are dropped, duplicates (same
/// node set) collapse, and the result is ordered by descending token size
/// with ascending anchor id as the tiebreak; ids are dense in that order.
std::vector<RemovalUnit> propose_units(const Ast& ast, const Resolution& res,
                                       int level);

/// Same anchors without DU closure (the hdd baseline).
std::vector<RemovalUnit> propose_raw_units(const Ast& ast,
                                           const Resolution& res, int level);

/// Every anchor of every level as one flat unclosed list (ddmin baseline).
std::vector<RemovalUnit> propose_flat_units(const Ast& ast,
                                            const Resolution& res);

struct ReducerContext {
  OracleRunner* oracle = nullptr;
  Mode mode = Mode::Rl;
  QTable* agent = nullptr;  // consulted in rl mode only
  RunStats* stats = nullptr;
  TraceWriter* trace = nullptr;  // optional
  int jobs = 1;
};

/// One sweep: per level, propose units, order them (agent or size), and
/// ddmin to the 1-minimal keep-set against the oracle; commits the removals.
/// Returns the number of units removed. Propagates ScriptError and
/// BudgetExhausted from the oracle.
int hdd_pass(ReductionState& state, const ReducerContext& ctx);

struct MinimalityResult {
  bool minimal = true;
  std::vector<RemovalUnit> witnesses;
};

/// Re-proposes every DU-closed unit over the final program and checks that
/// removing any single one fails the oracle. Witnesses are units whose
/// removal still passes (1-minimality violations).
MinimalityResult verify_one_du_minimality(const ReductionState& state,
                                          OracleRunner& oracle);

}  // namespace ducut
