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

#include <fstream>
#include <string>
#include <vector>

#include "ducut/dataflow.hpp"
#include "ducut/oracle.hpp"

namespace ducut {

/// JSON-lines reduction log: propose/attempt/commit/revert events. Attempt
/// and commit events carry the removed subtree roots so a run can be
/// replayed exactly from the original parse. Contains nothing
/// non-deterministic; equal runs produce byte-equal traces.
class TraceWriter {
 public:
  TraceWriter() = default;  // disabled
  explicit TraceWriter(const std::string& path);

  bool enabled() const { return enabled_; }

  void propose(int level, const RemovalUnit& unit);
  void attempt(int level, const std::vector<int>& unit_ids,
               const std::vector<NodeId>& nodes, const OracleVerdict& verdict,
               int tokens_before, int tokens_after);
  void revert(int level, const std::vector<int>& unit_ids);
  void commit(int level, const std::vector<int>& unit_ids,
              const std::vector<NodeId>& nodes, int tokens_before,
              int tokens_after);

 private:
  void write_line(const std::string& line);

  bool enabled_ = false;
  std::ofstream out_;
};

}  // namespace ducut
