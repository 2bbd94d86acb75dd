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
// Shared plumbing for the committee command-line tool.

#ifndef COMMITTEE_TOOLS_REPORT_HPP_
#define COMMITTEE_TOOLS_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "committee/election.hpp"
#include "committee/rational.hpp"
#include "committee/scoring.hpp"
#include "committee/winners.hpp"

namespace committee::cli {

inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // usage errors, failed self-checks
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitCap = 4;

// Bad flag combinations; exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  bool decimal = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t cap = WinnerOptions{}.enumeration_cap;
  std::size_t tie_cap = WinnerOptions{}.tie_cap;

  WinnerOptions winner_options() const {
    return {cap, tie_cap, threads == 0 ? 1u : threads};
  }
};

struct RunReport {
  std::string command;
  std::string fingerprint;
  std::string algorithm;
  double duration_seconds = 0;
  nlohmann::json result = nlohmann::json::object();
  // Human-readable rendering of `result`.
  std::string text;
  int exit_code = kExitOk;

  nlohmann::json to_json() const;
};

// 64-bit FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string fingerprint(std::string_view bytes);
std::string read_file(const std::string& path);

std::string show(const Rational& value, bool decimal);
nlohmann::json labels_json(const Election& election, const Committee& committee);
nlohmann::json winners_json(const Election& election, const WinnerResult& result);

// Comma-separated labels, e.g. "a,f".
Committee parse_committee(const Election& election, std::string_view text);

// The evaluator selected by --rule or --g.
struct RuleChoice {
  std::string name;
  ScoringEvaluator evaluator;
  std::optional<CountingFunction> g;
};

// Exactly one of `rule` and `g_spec` must be nonempty. With --g, k comes
// from the function and must agree with `k` when given.
RuleChoice choose_rule(const std::string& rule, const std::string& g_spec,
                       std::optional<std::size_t> t, std::size_t m,
                       std::optional<std::size_t> k);

}  // namespace committee::cli

#endif  // COMMITTEE_TOOLS_REPORT_HPP_
