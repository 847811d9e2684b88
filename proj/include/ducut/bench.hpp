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

#include "ducut/manager.hpp"

namespace ducut {

struct BenchRow {
  std::string fixture;
  std::string mode;
  int tokens_before = 0;
  int tokens_after = 0;
  std::int64_t oracle_calls = 0;  // real script spawns
  std::int64_t wall_ms = 0;
};

/// Runs every fixture (a .c file with a sibling .sh oracle of the same
/// stem) under every mode, sequentially and in name order. `base` supplies
/// seed/timeout/hyperparameters; outputs go to a scratch directory.
std::vector<BenchRow> run_bench(const std::string& corpus_dir,
                                const std::vector<Mode>& modes,
                                const RunConfig& base);

/// CSV with the header fixture,mode,tokens_before,tokens_after,
/// oracle_calls,wall_ms. Every column except wall_ms is deterministic for
/// a fixed seed.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace ducut
