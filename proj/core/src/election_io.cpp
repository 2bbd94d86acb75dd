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
#include "committee/election_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "committee/errors.hpp"

namespace committee {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool valid_label(std::string_view label) {
  if (label.empty() || label.front() == '#') return false;
  for (char ch : label) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::size_t parse_count(std::string_view token, std::size_t line,
                        const char* what) {
  if (token.empty()) throw ParseError(line, std::string("missing ") + what);
  std::size_t value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(line, std::string("malformed ") + what + " '" +
                                 std::string(token) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
    if (value > (std::size_t{1} << 40)) {
      throw ParseError(line, std::string(what) + " too large");
    }
  }
  return value;
}

}  // namespace

ElectionFile parse_election(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string_view content;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++number;
    const std::string_view content = trim(raw);
    if (!content.empty() && content.front() != '#') {
      lines.push_back({number, content});
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty election file");

  // Header: m n k.
  std::istringstream header{std::string(lines[0].content)};
  std::string tm, tn, tk, extra;
  header >> tm >> tn >> tk;
  if (header >> extra) {
    throw ParseError(lines[0].number, "header must be 'm n k'");
  }
  const std::size_t m = parse_count(tm, lines[0].number, "m");
  const std::size_t n = parse_count(tn, lines[0].number, "n");
  const std::size_t k = parse_count(tk, lines[0].number, "k");
  if (m == 0) throw ParseError(lines[0].number, "m must be positive");
  if (n == 0) throw ParseError(lines[0].number, "n must be positive");
  if (k > m) throw ParseError(lines[0].number, "k exceeds m");
  if (lines.size() != 1 + m + n) {
    const std::size_t at =
        lines.size() > 1 + m + n ? lines[1 + m + n].number : number;
    throw ParseError(at, "expected " + std::to_string(m) + " labels and " +
                             std::to_string(n) + " votes, found " +
                             std::to_string(lines.size() - 1) + " lines");
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, Candidate> index;
  labels.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    const Line& line = lines[1 + c];
    if (!valid_label(line.content)) {
      throw ParseError(line.number, "invalid candidate label '" +
                                        std::string(line.content) + "'");
    }
    std::string label(line.content);
    if (!index.emplace(label, static_cast<Candidate>(c)).second) {
      throw ParseError(line.number, "duplicate candidate label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }

  std::vector<Vote> votes;
  votes.reserve(n);
  std::vector<std::uint8_t> seen(m);
  for (std::size_t v = 0; v < n; ++v) {
    const Line& line = lines[1 + m + v];
    Vote vote;
    vote.reserve(m);
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t pos = 0;
    const std::string_view content = line.content;
    for (;;) {
      const auto comma = content.find(',', pos);
      const std::string_view token = trim(content.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos));
      const auto it = index.find(std::string(token));
      if (it == index.end()) {
        throw ParseError(line.number,
                         "unknown candidate label '" + std::string(token) + "'");
      }
      if (seen[it->second]) {
        throw ParseError(line.number, "vote is not a permutation: '" +
                                          std::string(token) + "' repeated");
      }
      seen[it->second] = 1;
      vote.push_back(it->second);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (vote.size() != m) {
      throw ParseError(line.number, "vote is not a permutation: ranks " +
                                        std::to_string(vote.size()) + " of " +
                                        std::to_string(m) + " candidates");
    }
    votes.push_back(std::move(vote));
  }
  return ElectionFile{Election(std::move(labels), std::move(votes)), k};
}

std::string serialize_election(const Election& election, std::size_t k) {
  std::string out;
  out += std::to_string(election.num_candidates()) + ' ' +
         std::to_string(election.num_voters()) + ' ' + std::to_string(k) +
         '\n';
  for (const auto& label : election.labels()) out += label + '\n';
  for (const Vote& vote : election.votes()) {
    for (std::size_t i = 0; i < vote.size(); ++i) {
      if (i) out += ',';
      out += election.label(vote[i]);
    }
    out += '\n';
  }
  return out;
}

ElectionFile read_election_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_election(buffer.str());
}

void write_election_file(const std::string& path, const Election& election,
                         std::size_t k) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_election(election, k);
}

}  // namespace committee
