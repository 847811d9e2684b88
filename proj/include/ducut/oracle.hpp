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
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ducut {

enum class OracleStatus { Pass, Fail, Timeout, ScriptFailure };

const char* oracle_status_name(OracleStatus s);

struct OracleVerdict {
  OracleStatus status = OracleStatus::Fail;
  std::optional<int> exit_code;
  std::int64_t wall_ms = 0;
  bool cached = false;

  bool pass() const { return status == OracleStatus::Pass; }
};

struct OracleStats {
  std::int64_t invocations = 0;  // real script spawns
  std::int64_t cache_hits = 0;
  std::optional<std::int64_t> budget;
  std::map<OracleStatus, std::int64_t> by_status;

  std::int64_t total_evaluations() const { return invocations + cache_hits; }
};

struct OracleConfig {
  std::string script_path;
  std::int64_t timeout_ms = 10000;
  std::optional<std::int64_t> budget;
  std::string temp_root;  // empty: the system temp directory
  std::string log_path;   // empty: discard script output
};

/// Runs the user test script against candidate programs.
///
/// Protocol: the candidate is written to a fresh temp directory, the script
/// is spawned with the candidate path as its single argument (and in
/// DUCUT_CANDIDATE), with the temp directory as working directory. Exit 0 is
/// Pass, any other exit is Fail, and exceeding the wall-clock limit kills
/// the process group and yields Timeout. Verdicts are memoized by SHA-256
/// of the candidate text; the temp directory is removed afterwards either
/// way. Assumes a deterministic script: replayed verdicts are only sound if
/// the script would decide the same way again.
class OracleRunner {
 public:
  explicit OracleRunner(OracleConfig config);

  /// Throws ScriptError if the script is missing/not executable or the
  /// spawn fails, BudgetExhausted when a needed spawn would exceed the
  /// budget. Cache hits never consume budget.
  OracleVerdict evaluate(const std::string& candidate_text);

  /// Evaluates candidates with up to `jobs` concurrent script processes.
  /// Verdicts come back in input order; duplicates within the batch spawn
  /// once and replay as cache hits.
  std::vector<OracleVerdict> evaluate_batch(
      const std::vector<std::string>& candidates, int jobs);

  OracleStats stats() const;

  static std::string sha256_hex(const std::string& data);

 private:
  OracleVerdict run_script(const std::string& candidate_text);
  OracleVerdict evaluate_locked_cache(const std::string& candidate_text);

  OracleConfig config_;
  mutable std::mutex mutex_;
  std::map<std::string, OracleVerdict> cache_;  // digest -> verdict
  OracleStats stats_;
  std::int64_t workspace_counter_ = 0;
};

}  // namespace ducut
