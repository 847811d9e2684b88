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

#include "ducut/manager.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ducut/errors.hpp"
#include "ducut/parser.hpp"
#include "ducut/unparse.hpp"
#include "ducut/version.hpp"

namespace ducut {

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

double pct(int original, int reduced) {
  if (original <= 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(reduced) /
                            static_cast<double>(original));
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

double ReductionReport::reduction_pct_tokens() const {
  return pct(original.tokens, reduced.tokens);
}

double ReductionReport::reduction_pct_statements() const {
  return pct(original.statements, reduced.statements);
}

ReductionReport debloat(const RunConfig& config) {
  auto start = std::chrono::steady_clock::now();
  if (config.out_path.empty()) {
    throw IoError("no output path configured for the reduced source");
  }

  Ast ast = parse_source(read_file(config.input_path));
  Resolution res = resolve(ast);

  OracleConfig oracle_config;
  oracle_config.script_path = config.test_script_path;
  oracle_config.timeout_ms = config.timeout_ms;
  oracle_config.budget = config.budget;
  oracle_config.temp_root = config.oracle_temp_root;
  oracle_config.log_path = config.oracle_log_path;
  OracleRunner oracle(oracle_config);

  std::string canonical = unparse(ast);
  if (!oracle.evaluate(canonical).pass()) {
    throw OriginalFailsOracle("the unmodified input fails the test script");
  }

  QTable agent = [&] {
    if (!config.qtable_path.empty() &&
        std::filesystem::exists(config.qtable_path)) {
      return QTable::load(config.qtable_path);
    }
    return QTable(config.alpha, config.gamma, config.epsilon, config.seed);
  }();
  RunStats stats;
  TraceWriter trace =
      config.trace_path.empty() ? TraceWriter() : TraceWriter(config.trace_path);

  ReductionState state{std::move(ast), std::move(res)};
  ReducerContext ctx;
  ctx.oracle = &oracle;
  ctx.mode = config.mode;
  ctx.agent = config.mode == Mode::Rl ? &agent : nullptr;
  ctx.stats = &stats;
  ctx.trace = trace.enabled() ? &trace : nullptr;
  ctx.jobs = config.jobs;

  ReductionReport report;
  report.tool_version = kToolVersion;
  report.mode = mode_name(config.mode);
  report.seed = config.seed;
  report.original = {state.ast.retained_token_count(),
                     state.ast.retained_statement_count()};
  report.config = config;

  // One episode per pass; the loop ends with the first zero-commit pass.
  bool exhausted = false;
  while (true) {
    int commits = 0;
    try {
      commits = hdd_pass(state, ctx);
    } catch (const BudgetExhausted&) {
      exhausted = true;
    }
    ++report.passes;
    report.commits_per_pass.push_back(commits);
    agent.decay_epsilon();
    if (exhausted || commits == 0) break;
  }
  report.budget_exhausted = exhausted;

  std::string reduced_text = unparse(state.ast);
  write_file(config.out_path, reduced_text);
  report.reduced = {state.ast.retained_token_count(),
                    state.ast.retained_statement_count()};
  report.final_digest = OracleRunner::sha256_hex(reduced_text);

  // The accepted state passed when it was committed; re-check the bytes we
  // actually wrote.
  if (!exhausted &&
      !oracle.evaluate(read_file(config.out_path)).pass()) {
    throw InternalError("emitted program does not pass the test script");
  }

  if (config.verify_minimality && !exhausted) {
    MinimalityResult minimality = verify_one_du_minimality(state, oracle);
    report.minimality_verified = minimality.minimal;
    report.minimality_witnesses = static_cast<int>(minimality.witnesses.size());
  }

  if (!config.qtable_path.empty()) agent.save(config.qtable_path);

  report.oracle = oracle.stats();
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

  if (!config.report_path.empty()) emit_report(report, config.report_path);
  return report;
}

namespace {

json config_to_json(const RunConfig& c) {
  json out = {{"input", c.input_path},
              {"test", c.test_script_path},
              {"mode", mode_name(c.mode)},
              {"seed", c.seed},
              {"timeout_ms", c.timeout_ms},
              {"jobs", c.jobs},
              {"verify_minimality", c.verify_minimality},
              {"out", c.out_path},
              {"report", c.report_path},
              {"trace", c.trace_path},
              {"qtable", c.qtable_path},
              {"alpha", c.alpha},
              {"gamma", c.gamma},
              {"epsilon", c.epsilon}};
  out["budget"] = c.budget ? json(*c.budget) : json(nullptr);
  return out;
}

}  // namespace

std::string render_report(const ReductionReport& r) {
  json verdicts = json::object();
  for (const auto& [status, count] : r.oracle.by_status) {
    verdicts[oracle_status_name(status)] = count;
  }
  json doc = {
      {"version", 1},
      {"tool_version", r.tool_version},
      {"mode", r.mode},
      {"seed", r.seed},
      {"original",
       {{"tokens", r.original.tokens}, {"statements", r.original.statements}}},
      {"final",
       {{"tokens", r.reduced.tokens}, {"statements", r.reduced.statements}}},
      {"reduction_pct",
       {{"tokens", round2(r.reduction_pct_tokens())},
        {"statements", round2(r.reduction_pct_statements())}}},
      {"oracle",
       {{"invocations", r.oracle.invocations},
        {"cache_hits", r.oracle.cache_hits},
        {"budget", r.oracle.budget ? json(*r.oracle.budget) : json(nullptr)},
        {"budget_exhausted", r.budget_exhausted},
        {"verdicts", verdicts}}},
      {"passes", r.passes},
      {"commits_per_pass", r.commits_per_pass},
      {"wall_ms", r.wall_ms},
      {"final_digest", r.final_digest},
      {"config", config_to_json(r.config)},
  };
  if (r.minimality_verified.has_value()) {
    doc["minimality"] = {{"verified", *r.minimality_verified},
                         {"witnesses", r.minimality_witnesses}};
  }
  return doc.dump(2) + "\n";
}

void emit_report(const ReductionReport& report, const std::string& path) {
  write_file(path, render_report(report));
}

}  // namespace ducut
