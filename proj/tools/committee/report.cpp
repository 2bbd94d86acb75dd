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
#include "report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "committee/errors.hpp"

namespace committee::cli {

nlohmann::json RunReport::to_json() const {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"input_fingerprint", fingerprint},
          {"algorithm", algorithm},
          {"duration_seconds", duration_seconds},
          {"result", result}};
}

std::string fingerprint(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string show(const Rational& value, bool decimal) {
  if (!decimal) return format_rational(value);
  std::ostringstream out;
  out << std::setprecision(12) << value.convert_to<double>();
  return out.str();
}

nlohmann::json labels_json(const Election& election, const Committee& committee) {
  nlohmann::json out = nlohmann::json::array();
  for (Candidate c : committee.members()) out.push_back(election.label(c));
  return out;
}

nlohmann::json winners_json(const Election& election, const WinnerResult& result) {
  nlohmann::json winners = nlohmann::json::array();
  for (const auto& w : result.winners) winners.push_back(labels_json(election, w));
  return {{"score", format_rational(result.best_score)},
          {"winners", winners},
          {"tie_count", result.winners.size()},
          {"exact", result.exact},
          {"truncated", result.truncated},
          {"ties_complete", result.ties_complete}};
}

Committee parse_committee(const Election& election, std::string_view text) {
  std::vector<Candidate> members;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string label(text.substr(start, end - start));
    if (!label.empty()) {
      const auto c = election.find(label);
      if (!c) throw ParseError(0, "unknown candidate '" + label + "'");
      members.push_back(*c);
    }
    start = end + 1;
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw ParseError(0, "committee lists a candidate twice");
  }
  return Committee(std::move(members));
}

RuleChoice choose_rule(const std::string& rule, const std::string& g_spec,
                       std::optional<std::size_t> t, std::size_t m,
                       std::optional<std::size_t> k) {
  if (rule.empty() == g_spec.empty()) {
    throw UsageError("give exactly one of --rule and --g");
  }
  if (!g_spec.empty()) {
    CountingFunction g = CountingFunction::parse(g_spec);
    if (k && *k != g.k()) {
      throw PreconditionError("--g has k = " + std::to_string(g.k()) +
                              " but --k is " + std::to_string(*k));
    }
    return {"g=" + g.to_string(), counting_evaluator(g, m), g};
  }
  if (!k) throw UsageError("--k is required");
  const Rule r = parse_rule(rule);
  ScoringEvaluator evaluator = builtin(r, m, *k, t);
  auto g = evaluator.counting_function();
  return {evaluator.name(), std::move(evaluator), std::move(g)};
}

}  // namespace committee::cli
