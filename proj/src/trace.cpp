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

#include "ducut/trace.hpp"

#include <nlohmann/json.hpp>

#include "ducut/errors.hpp"

namespace ducut {

using json = nlohmann::json;

TraceWriter::TraceWriter(const std::string& path) {
  out_.open(path, std::ios::trunc);
  if (!out_) throw IoError("cannot write trace file '" + path + "'");
  enabled_ = true;
}

void TraceWriter::write_line(const std::string& line) {
  out_ << line << "\n";
  out_.flush();
}

void TraceWriter::propose(int level, const RemovalUnit& unit) {
  if (!enabled_) return;
  json e = {{"event", "propose"},
            {"level", level},
            {"unit_id", unit.id},
            {"kind", unit_kind_name(unit.kind)},
            {"anchor", unit.anchor},
            {"token_size", unit.token_size},
            {"depth", unit.depth},
            {"nodes", unit.nodes}};
  write_line(e.dump());
}

void TraceWriter::attempt(int level, const std::vector<int>& unit_ids,
                          const std::vector<NodeId>& nodes,
                          const OracleVerdict& verdict, int tokens_before,
                          int tokens_after) {
  if (!enabled_) return;
  json e = {{"event", "attempt"},
            {"level", level},
            {"unit_ids", unit_ids},
            {"nodes", nodes},
            {"verdict", oracle_status_name(verdict.status)},
            {"cached", verdict.cached},
            {"tokens_before", tokens_before},
            {"tokens_after", tokens_after}};
  write_line(e.dump());
}

void TraceWriter::revert(int level, const std::vector<int>& unit_ids) {
  if (!enabled_) return;
  json e = {{"event", "revert"}, {"level", level}, {"unit_ids", unit_ids}};
  write_line(e.dump());
}

void TraceWriter::commit(int level, const std::vector<int>& unit_ids,
                         const std::vector<NodeId>& nodes, int tokens_before,
                         int tokens_after) {
  if (!enabled_) return;
  json e = {{"event", "commit"},
            {"level", level},
            {"unit_ids", unit_ids},
            {"nodes", nodes},
            {"tokens_before", tokens_before},
            {"tokens_after", tokens_after}};
  write_line(e.dump());
}

}  // namespace ducut
