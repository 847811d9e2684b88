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
#include <optional>
#include <string>
#include <vector>

#include "ducut/oracle.hpp"
#include "ducut/reducer.hpp"

namespace ducut {

struct RunConfig {
  std::string input_path;
  std::string test_script_path;
  Mode mode = Mode::Rl;
  std::uint64_t seed = 0;
  std::int64_t timeout_ms = 10000;
  int jobs = 1;
  std::optional<std::int64_t> budget;
  bool verify_minimality = false;

  std::string out_path;     // reduced source (required)
  std::string report_path;  // optional
  std::string trace_path;   // optional
  std::string qtable_path;  // optional: loaded when present, saved at exit

  double alpha = 0.1;
  double gamma = 0.9;
  double epsilon = 0.2;

  std::string oracle_temp_root;  // optional override for tests
  std::string oracle_log_path;   // optional script output capture
};

struct SizeMetrics {
  int tokens = 0;
  int statements = 0;
};

struct ReductionReport {
  std::string tool_version;
  std::string mode;
  std::uint64_t seed = 0;
  SizeMetrics original;
  SizeMetrics reduced;
  OracleStats oracle;
  bool budget_exhausted = false;
  int passes = 0;
  std::vector<int> commits_per_pass;
  std::optional<bool> minimality_verified;
  int minimality_witnesses = 0;
  std::int64_t wall_ms = 0;
  std::string final_digest;
  RunConfig config;

  double reduction_pct_tokens() const;
  double reduction_pct_statements() const;
};

/// End-to-end reduction: parse, guard the oracle on the canonical input,
/// repeat RL-ordered (or baseline-ordered) HDD passes until one commits
/// nothing, write the reduced source, re-check it against the oracle, and
/// assemble the report. On BudgetExhausted the best accepted program is
/// written and the report is returned with budget_exhausted set.
/// Throws ParseError, UnresolvedSymbol, OriginalFailsOracle, ScriptError,
/// and IoError.
ReductionReport debloat(const RunConfig& config);

/// Versioned JSON rendering; percentages are rounded to two decimals here
/// and nowhere else.
std::string render_report(const ReductionReport& report);

void emit_report(const ReductionReport& report, const std::string& path);

}  // namespace ducut
