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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ducut/bench.hpp"
#include "ducut/errors.hpp"
#include "ducut/manager.hpp"
#include "ducut/parser.hpp"
#include "ducut/unparse.hpp"
#include "ducut/version.hpp"

namespace {

// Exit codes: 0 success, 2 parse/usage, 3 original fails oracle, 4 script
// error, 5 internal failure, 6 budget exhausted (partial result written).
enum ExitCode {
  kOk = 0,
  kUsage = 2,
  kOriginalFails = 3,
  kScript = 4,
  kInternal = 5,
  kBudget = 6,
};

std::uint64_t default_seed() {
  const char* env = std::getenv("DUCUT_SEED");
  if (env != nullptr && *env != '\0') {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ducut::IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_reduce(const ducut::RunConfig& config) {
  ducut::ReductionReport report = ducut::debloat(config);
  std::cout << "reduced " << config.input_path << ": "
            << report.original.tokens << " -> " << report.reduced.tokens
            << " tokens (" << report.oracle.invocations
            << " oracle invocations, " << report.oracle.cache_hits
            << " cache hits, " << report.passes << " passes)\n";
  if (report.minimality_verified.has_value()) {
    std::cout << "1-minimality: "
              << (*report.minimality_verified ? "verified" : "violated")
              << " (" << report.minimality_witnesses << " witnesses)\n";
  }
  if (report.budget_exhausted) {
    std::cout << "oracle budget exhausted; wrote best accepted program\n";
    return kBudget;
  }
  return kOk;
}

int run_analyze(const std::string& input, bool dump_chains) {
  ducut::Ast ast = ducut::parse_source(read_file_or_die(input));
  ducut::Resolution res = ducut::resolve(ast);
  if (!dump_chains) {
    std::cout << "tokens: " << ast.retained_token_count() << "\n"
              << "statements: " << ast.retained_statement_count() << "\n"
              << "functions: " << res.function_defs.size() << "\n"
              << "globals: " << res.global_vars.size() << "\n";
    return kOk;
  }
  for (const ducut::DuChain& chain : ducut::compute_du_chains(ast, res)) {
    nlohmann::json line = {
        {"symbol", ast.node(chain.decl).symbol},
        {"scope",
         res.decl_scope.count(chain.decl)
             ? res.scope_names[static_cast<std::size_t>(
                   res.decl_scope.at(chain.decl))]
             : "global"},
        {"def_node", chain.def_site},
        {"uses", nlohmann::json::array()},
    };
    for (const auto& [stmt, ref] : chain.uses) line["uses"].push_back(ref);
    std::cout << line.dump() << "\n";
  }
  return kOk;
}

int run_bench_cmd(const std::string& corpus, const std::string& modes_csv,
                  const ducut::RunConfig& base, const std::string& out_csv) {
  std::vector<ducut::Mode> modes;
  std::stringstream ss(modes_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) modes.push_back(ducut::parse_mode(name));
  }
  if (modes.empty()) throw ducut::FormatError("no modes given");

  std::vector<ducut::BenchRow> rows = ducut::run_bench(corpus, modes, base);
  std::string csv = ducut::bench_csv(rows);
  if (out_csv.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_csv);
    if (!out) throw ducut::IoError("cannot write '" + out_csv + "'");
    out << csv;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ducut: DU-chain-preserving source debloater"};
  app.set_version_flag("--version", ducut::kToolVersion);
  app.require_subcommand(1);

  ducut::RunConfig config;
  config.seed = default_seed();
  std::string mode_name_arg = "rl";

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a program");
  reduce->add_option("--input", config.input_path, "C source file")->required();
  reduce->add_option("--test", config.test_script_path, "oracle test script")
      ->required();
  reduce->add_option("--mode", mode_name_arg, "ddmin|hdd|hdd-du|rl");
  reduce->add_option("--seed", config.seed, "RNG seed (default $DUCUT_SEED)");
  reduce->add_option("--timeout-ms", config.timeout_ms, "oracle timeout");
  reduce->add_option("--jobs", config.jobs, "parallel oracle processes");
  std::int64_t budget = -1;
  reduce->add_option("--budget", budget, "max oracle invocations");
  reduce->add_flag("--verify-minimality", config.verify_minimality,
                   "check 1-minimality of the result");
  reduce->add_option("--out", config.out_path, "reduced source path");
  reduce->add_option("--report", config.report_path, "JSON report path");
  reduce->add_option("--trace", config.trace_path, "JSONL trace path");
  reduce->add_option("--qtable", config.qtable_path,
                     "Q-table file (loaded when present, saved on exit)");
  reduce->add_option("--alpha", config.alpha, "learning rate");
  reduce->add_option("--gamma", config.gamma, "discount factor");
  reduce->add_option("--epsilon", config.epsilon, "exploration rate");

  std::string analyze_input;
  bool dump_chains = false;
  CLI::App* analyze = app.add_subcommand("analyze", "inspect a program");
  analyze->add_option("--input", analyze_input, "C source file")->required();
  analyze->add_flag("--dump-du-chains", dump_chains,
                    "print def-use chains as JSON lines");

  std::string corpus;
  std::string modes_csv = "ddmin,hdd,hdd-du,rl";
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "run a fixture corpus");
  bench->add_option("--corpus", corpus, "directory of .c/.sh fixtures")
      ->required();
  bench->add_option("--modes", modes_csv, "comma-separated mode list");
  bench->add_option("--seed", config.seed, "RNG seed");
  bench->add_option("--timeout-ms", config.timeout_ms, "oracle timeout");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    config.mode = ducut::parse_mode(mode_name_arg);
    if (budget >= 0) config.budget = budget;
    if (reduce->parsed()) {
      if (config.out_path.empty()) {
        config.out_path = config.input_path + ".reduced.c";
      }
      return run_reduce(config);
    }
    if (analyze->parsed()) return run_analyze(analyze_input, dump_chains);
    if (bench->parsed()) return run_bench_cmd(corpus, modes_csv, config, bench_out);
    return kUsage;
  } catch (const ducut::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ducut::UnresolvedSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ducut::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ducut::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ducut::OriginalFailsOracle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOriginalFails;
  } catch (const ducut::ScriptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kScript;
  } catch (const ducut::BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
