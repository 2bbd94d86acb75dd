// Copyright 2026 The committee-rules Authors
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
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "committee/errors.hpp"

namespace {

using namespace committee::cli;

void add_rule_options(CLI::App* cmd, RuleArgs& rule) {
  cmd->add_option("--rule", rule.rule,
                  "sntv, bloc, k-borda, beta-cc, cc-alpha, perfectionist, nearly-bloc, pav");
  cmd->add_option("--g", rule.g, "counting function g(0),...,g(k), e.g. 0,1,1");
  cmd->add_option("--k", rule.k, "committee size (default: the file header)");
  cmd->add_option("--t", rule.t, "approval threshold for pav");
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Committee scoring rules: winners, axioms and instance generators"};
  app.set_version_flag("--version", "committee 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json, "print a JSON run report");
  app.add_flag("--decimal", global.decimal, "show scores as decimals");
  app.add_option("--seed", global.seed, "generator seed");
  app.add_option("--threads", global.threads, "brute-force worker threads");
  app.add_option("--cap", global.cap, "largest number of committees to enumerate");
  app.add_option("--tie-cap", global.tie_cap, "largest tie set reported in full");

  std::function<RunReport()> run;

  WinnersArgs winners;
  auto* winners_cmd = app.add_subcommand("winners", "compute the winning committees");
  winners_cmd->add_option("file", winners.file, "election file")->required();
  add_rule_options(winners_cmd, winners.rule);
  winners_cmd->add_option("--algorithm", winners.algorithm)
      ->check(CLI::IsMember({"auto", "brute-force", "separable", "perfectionist",
                             "near-perfectionist", "greedy", "fpt-voters",
                             "exact-counting"}));
  winners_cmd->add_option("--q", winners.q, "near-perfectionist bound on k - sing(g)");
  winners_cmd->callback([&] { run = [&] { return cmd_winners(winners, global); }; });

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "score one committee");
  score_cmd->add_option("file", score.file, "election file")->required();
  score_cmd->add_option("--committee", score.committee, "labels, e.g. a,f")->required();
  add_rule_options(score_cmd, score.rule);
  score_cmd->callback([&] { run = [&] { return cmd_score(score, global); }; });

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze-g", "analyze a counting function");
  analyze_cmd->add_option("g", analyze.g, "g(0),...,g(k), e.g. 0,1,1")->required();
  analyze_cmd->add_option("--k", analyze.k, "expected committee size");
  analyze_cmd->callback([&] { run = [&] { return cmd_analyze(analyze, global); }; });

  CheckFmArgs check;
  auto* check_cmd = app.add_subcommand("check-fm", "test the fixed-majority criterion");
  check_cmd->add_option("file", check.file, "election file")->required();
  add_rule_options(check_cmd, check.rule);
  check_cmd->callback([&] { run = [&] { return cmd_check_fm(check, global); }; });

  WitnessArgs witness;
  auto* witness_cmd =
      app.add_subcommand("witness", "build an election on which a rule fails fixed-majority");
  add_rule_options(witness_cmd, witness.rule);
  witness_cmd->add_option("--m", witness.m, "number of candidates (>= 2k)")->required();
  witness_cmd->add_option("--out", witness.out, "output prefix for .elec and .json")
      ->capture_default_str();
  witness_cmd->callback([&] { run = [&] { return cmd_witness(witness, global); }; });

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an election");
  gen_cmd->set_help_flag("--help", "Print this help message and exit");
  gen_cmd->add_option("kind", gen.kind, "ic, fm, x3c or clique")
      ->required()
      ->check(CLI::IsMember({"ic", "fm", "x3c", "clique"}));
  gen_cmd->add_option("input", gen.input, "X3C or graph file for x3c and clique");
  gen_cmd->add_option("--m", gen.m, "candidates (ic, fm)");
  gen_cmd->add_option("--n", gen.n, "voters (ic, fm)");
  gen_cmd->add_option("--k", gen.k, "committee size (ic, fm)")->capture_default_str();
  gen_cmd->add_option("--h", gen.h, "clique size (clique)");
  gen_cmd->add_option("--c", gen.c, "constant c, k = (c+2)h (clique)");
  gen_cmd->add_option("--g", gen.g, "convex counting function (clique)");
  gen_cmd->add_option("--out", gen.out, "write the election here instead of stdout");
  gen_cmd->callback([&] { run = [&] { return cmd_gen(gen, global); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time algorithms, CSV output");
  bench_cmd->add_option("suite", bench.suite, "brute, greedy, fpt-voters or near-perf")
      ->required()
      ->check(CLI::IsMember({"brute", "greedy", "fpt-voters", "near-perf"}));
  bench_cmd->add_option("--sizes", bench.sizes, "m (or n for fpt-voters) values")
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "repetitions; the fastest is kept")
      ->capture_default_str();
  bench_cmd->callback([&] { run = [&] { return cmd_bench(bench, global); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    RunReport report = run();
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.command = join_args(argc, argv);
    if (global.json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.text;
    }
    return report.exit_code;
  } catch (const committee::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const committee::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const committee::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
