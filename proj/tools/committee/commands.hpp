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
// Subcommands of the committee tool. Each fills a RunReport; main() times
// it and prints it.

#ifndef COMMITTEE_TOOLS_COMMANDS_HPP_
#define COMMITTEE_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace committee::cli {

struct RuleArgs {
  std::string rule;
  std::string g;
  std::optional<std::size_t> k;
  std::optional<std::size_t> t;
};

struct WinnersArgs {
  std::string file;
  RuleArgs rule;
  std::string algorithm = "auto";
  std::optional<std::size_t> q;
};
RunReport cmd_winners(const WinnersArgs& args, const GlobalOptions& global);

struct ScoreArgs {
  std::string file;
  RuleArgs rule;
  std::string committee;
};
RunReport cmd_score(const ScoreArgs& args, const GlobalOptions& global);

struct AnalyzeArgs {
  std::string g;
  std::optional<std::size_t> k;
};
RunReport cmd_analyze(const AnalyzeArgs& args, const GlobalOptions& global);

struct CheckFmArgs {
  std::string file;
  RuleArgs rule;
};
RunReport cmd_check_fm(const CheckFmArgs& args, const GlobalOptions& global);

struct WitnessArgs {
  RuleArgs rule;
  std::size_t m = 0;
  std::string out = "witness";
};
RunReport cmd_witness(const WitnessArgs& args, const GlobalOptions& global);

struct GenArgs {
  std::string kind;
  std::string input;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t h = 0;
  std::size_t c = 0;
  std::string g;
  std::string out;
};
RunReport cmd_gen(const GenArgs& args, const GlobalOptions& global);

struct BenchArgs {
  std::string suite;
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
};
RunReport cmd_bench(const BenchArgs& args, const GlobalOptions& global);

}  // namespace committee::cli

#endif  // COMMITTEE_TOOLS_COMMANDS_HPP_
