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

#include "ducut/bench.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "ducut/errors.hpp"

namespace ducut {

namespace fs = std::filesystem;

std::vector<BenchRow> run_bench(const std::string& corpus_dir,
                                const std::vector<Mode>& modes,
                                const RunConfig& base) {
  if (!fs::is_directory(corpus_dir)) {
    throw IoError("corpus directory '" + corpus_dir + "' not found");
  }
  std::vector<fs::path> fixtures;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.path().extension() != ".c") continue;
    fs::path script = entry.path();
    script.replace_extension(".sh");
    if (fs::exists(script)) fixtures.push_back(entry.path());
  }
  std::sort(fixtures.begin(), fixtures.end());

  fs::path scratch =
      fs::temp_directory_path() / ("ducut-bench-" + std::to_string(getpid()));
  fs::create_directories(scratch);

  std::vector<BenchRow> rows;
  for (const fs::path& fixture : fixtures) {
    for (Mode mode : modes) {
      RunConfig config = base;
      config.input_path = fixture.string();
      fs::path script = fixture;
      script.replace_extension(".sh");
      config.test_script_path = script.string();
      config.mode = mode;
      config.out_path =
          (scratch / (fixture.stem().string() + "." + mode_name(mode) + ".c"))
              .string();
      config.report_path.clear();
      config.trace_path.clear();
      config.qtable_path.clear();

      ReductionReport report = debloat(config);
      rows.push_back({fixture.stem().string(), mode_name(mode),
                      report.original.tokens, report.reduced.tokens,
                      report.oracle.invocations, report.wall_ms});
    }
  }
  std::error_code ec;
  fs::remove_all(scratch, ec);
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "fixture,mode,tokens_before,tokens_after,oracle_calls,wall_ms\n";
  for (const BenchRow& r : rows) {
    out << r.fixture << "," << r.mode << "," << r.tokens_before << ","
        << r.tokens_after << "," << r.oracle_calls << "," << r.wall_ms << "\n";
  }
  return out.str();
}

}  // namespace ducut
