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
#include "committee/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "committee/errors.hpp"
#include "committee/random.hpp"

namespace committee {
namespace {

std::vector<Candidate> identity(std::size_t m) {
  std::vector<Candidate> out(m);
  std::iota(out.begin(), out.end(), Candidate{0});
  return out;
}

// Completes a ranking: `top` first, then every other candidate by index.
Vote complete_ranking(const std::vector<Candidate>& top, std::size_t m) {
  Vote vote = top;
  vote.reserve(m);
  std::vector<char> used(m, 0);
  for (Candidate c : top) used[c] = 1;
  for (Candidate c = 0; c < m; ++c) {
    if (!used[c]) vote.push_back(c);
  }
  return vote;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      const auto last = line.find_last_not_of(" \t");
      lines.push_back({number, line.substr(first, last - first + 1)});
    }
    start = end + 1;
  }
  return lines;
}

std::uint64_t parse_number(const Line& line, std::string_view token) {
  std::uint64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ParseError(line.number, "expected a nonnegative integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text,
                                    std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t pos = text.find_first_of(separators, start);
    const std::size_t end = pos == std::string_view::npos ? text.size() : pos;
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool clique_search(const std::vector<std::vector<char>>& adjacent,
                   std::vector<std::uint32_t>& chosen, std::uint32_t next,
                   std::size_t h) {
  if (chosen.size() == h) return true;
  const auto n = static_cast<std::uint32_t>(adjacent.size());
  for (std::uint32_t v = next; v < n; ++v) {
    if (n - v < h - chosen.size()) return false;
    bool ok = true;
    for (std::uint32_t u : chosen) ok = ok && adjacent[u][v];
    if (!ok) continue;
    chosen.push_back(v);
    if (clique_search(adjacent, chosen, v + 1, h)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Election gen_impartial_culture(std::size_t m, std::size_t n,
                               std::uint64_t seed) {
  if (m == 0 || n == 0) throw PreconditionError("need m, n >= 1");
  SplitMix64 rng(seed);
  std::vector<Vote> votes;
  votes.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    Vote vote = identity(m);
    rng.shuffle(std::span<Candidate>(vote));
    votes.push_back(std::move(vote));
  }
  return Election(default_labels(m), std::move(votes));
}

FixedMajorityProfile gen_fixed_majority_profile(std::size_t m, std::size_t n,
                                                std::size_t k,
                                                std::uint64_t seed) {
  if (m == 0 || n == 0) throw PreconditionError("need m, n >= 1");
  if (k == 0 || k > m) throw PreconditionError("need 1 <= k <= m");
  SplitMix64 rng(seed);
  std::vector<Candidate> order = identity(m);
  rng.shuffle(std::span<Candidate>(order));
  std::vector<Candidate> planted(order.begin(), order.begin() + k);
  std::vector<Candidate> rest(order.begin() + k, order.end());

  const std::size_t majority = n / 2 + 1;
  std::vector<Vote> votes;
  votes.reserve(n);
  for (std::size_t v = 0; v < majority; ++v) {
    std::vector<Candidate> top = planted;
    std::vector<Candidate> bottom = rest;
    rng.shuffle(std::span<Candidate>(top));
    rng.shuffle(std::span<Candidate>(bottom));
    top.insert(top.end(), bottom.begin(), bottom.end());
    votes.push_back(std::move(top));
  }
  for (std::size_t v = majority; v < n; ++v) {
    Vote vote = identity(m);
    rng.shuffle(std::span<Candidate>(vote));
    votes.push_back(std::move(vote));
  }
  return {Election(default_labels(m), std::move(votes)),
          Committee(std::move(planted))};
}

void X3cInstance::validate() const {
  if (universe_size == 0 || universe_size % 3 != 0) {
    throw PreconditionError("X3C universe size must be a positive multiple of 3");
  }
  std::vector<std::size_t> frequency(universe_size, 0);
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (set[i] >= universe_size) {
        throw PreconditionError("X3C set element out of range");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (set[i] == set[j]) {
          throw PreconditionError("X3C set has repeated elements");
        }
      }
      if (++frequency[set[i]] > 3) {
        throw PreconditionError("X3C element " + std::to_string(set[i] + 1) +
                                " occurs in more than 3 sets");
      }
    }
  }
}

X3cInstance X3cInstance::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty X3C file");
  const auto header = split(lines[0].text, " \t");
  if (header.size() != 2 || header[0] != "x3c") {
    throw ParseError(lines[0].number, "expected header 'x3c <universe size>'");
  }
  X3cInstance instance;
  instance.universe_size = parse_number(lines[0], header[1]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split(lines[i].text, ", \t");
    if (tokens.size() != 3) {
      throw ParseError(lines[i].number, "expected three elements per set");
    }
    std::array<std::uint32_t, 3> set{};
    for (std::size_t t = 0; t < 3; ++t) {
      const auto value = parse_number(lines[i], tokens[t]);
      if (value == 0 || value > instance.universe_size) {
        throw ParseError(lines[i].number, "element out of range 1.." +
                                              std::to_string(instance.universe_size));
      }
      set[t] = static_cast<std::uint32_t>(value - 1);
    }
    instance.sets.push_back(set);
  }
  try {
    instance.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return instance;
}

std::string X3cInstance::serialize() const {
  std::ostringstream out;
  out << "x3c " << universe_size << '\n';
  for (const auto& set : sets) {
    out << set[0] + 1 << ',' << set[1] + 1 << ',' << set[2] + 1 << '\n';
  }
  return out.str();
}

bool has_exact_cover(const X3cInstance& instance) {
  instance.validate();
  std::vector<std::vector<std::size_t>> containing(instance.universe_size);
  for (std::size_t s = 0; s < instance.sets.size(); ++s) {
    for (auto e : instance.sets[s]) containing[e].push_back(s);
  }
  std::vector<char> covered(instance.universe_size, 0);
  auto search = [&](auto&& self) -> bool {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) return true;
    const auto element = static_cast<std::size_t>(it - covered.begin());
    for (std::size_t s : containing[element]) {
      const auto& set = instance.sets[s];
      if (covered[set[0]] || covered[set[1]] || covered[set[2]]) continue;
      for (auto e : set) covered[e] = 1;
      if (self(self)) return true;
      for (auto e : set) covered[e] = 0;
    }
    return false;
  };
  return search(search);
}

X3cReduction gen_from_x3c(const X3cInstance& instance) {
  instance.validate();
  auto sets = instance.sets;
  std::size_t universe = instance.universe_size;
  std::vector<std::size_t> frequency(universe, 0);
  for (const auto& set : sets) {
    for (auto e : set) ++frequency[e];
  }
  const bool uncovered =
      std::find(frequency.begin(), frequency.end(), 0) != frequency.end();
  const std::size_t max_frequency =
      *std::max_element(frequency.begin(), frequency.end());

  // Fresh disjoint triples, each forced into any cover, until k reaches the
  // largest element frequency.
  std::size_t padding = 0;
  while (universe / 3 < max_frequency) {
    const auto base = static_cast<std::uint32_t>(universe);
    sets.push_back({base, base + 1, base + 2});
    universe += 3;
    ++padding;
  }
  const std::size_t k = universe / 3;

  std::vector<std::string> labels;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    labels.push_back("S" + std::to_string(s + 1));
  }
  std::vector<std::vector<Candidate>> tops(universe);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (auto e : sets[s]) tops[e].push_back(static_cast<Candidate>(s));
  }
  for (std::size_t voter = 0; voter < universe; ++voter) {
    for (std::size_t i = 0; i < k; ++i) {
      tops[voter].push_back(static_cast<Candidate>(labels.size()));
      labels.push_back("dummy_" + std::to_string(voter + 1) + "_" +
                       std::to_string(i + 1));
    }
  }
  std::vector<Vote> votes;
  votes.reserve(universe);
  for (const auto& top : tops) votes.push_back(complete_ranking(top, labels.size()));
  return {Election(std::move(labels), std::move(votes)), k, Rational(3 * k),
          padding, uncovered};
}

void Graph::validate() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("graph has a self-loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw PreconditionError("graph has a duplicate edge");
    }
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  return degree;
}

long Graph::regular_degree() const {
  const auto degree = degrees();
  if (degree.empty()) return -1;
  for (auto d : degree) {
    if (d != degree[0]) return -1;
  }
  return static_cast<long>(degree[0]);
}

Graph Graph::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const auto header = split(lines[0].text, " \t");
  if (header.size() != 1) {
    throw ParseError(lines[0].number, "expected the vertex count");
  }
  Graph graph;
  graph.vertex_count = parse_number(lines[0], header[0]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split(lines[i].text, ", \t");
    if (tokens.size() != 2) {
      throw ParseError(lines[i].number, "expected an edge 'u v'");
    }
    const auto u = parse_number(lines[i], tokens[0]);
    const auto v = parse_number(lines[i], tokens[1]);
    if (u >= graph.vertex_count || v >= graph.vertex_count) {
      throw ParseError(lines[i].number, "vertex out of range");
    }
    graph.edges.emplace_back(static_cast<std::uint32_t>(u),
                             static_cast<std::uint32_t>(v));
  }
  try {
    graph.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return graph;
}

bool has_clique(const Graph& graph, std::size_t h) {
  graph.validate();
  if (h == 0) return true;
  std::vector<std::vector<char>> adjacent(
      graph.vertex_count, std::vector<char>(graph.vertex_count, 0));
  for (auto [u, v] : graph.edges) adjacent[u][v] = adjacent[v][u] = 1;
  std::vector<std::uint32_t> chosen;
  return clique_search(adjacent, chosen, 0, h);
}

CountingFunction normalize_for_clique(const CountingFunction& g) {
  const auto sing = singularity(g);
  if (sing.infinite()) {
    throw PreconditionError("counting function is linear (no singularity)");
  }
  const Rational slope = g.differential(1);
  const Rational jump = g.differential(*sing.value);
  std::vector<Rational> values(g.values().begin(), g.values().end());
  if (slope == 0) {
    BigInt scale = common_denominator(values);
    if (jump * scale <= 1) scale *= 2;
    for (auto& v : values) v *= scale;
  } else {
    for (auto& v : values) {
      v /= slope;
      if (boost::multiprecision::denominator(v) != 1) {
        throw PreconditionError(
            "counting function does not scale to integers with unit slope");
      }
    }
  }
  return CountingFunction(std::move(values));
}

CliqueReduction gen_from_clique(const Graph& graph, std::size_t h,
                                const CountingFunction& g, std::size_t c) {
  graph.validate();
  const long degree = graph.regular_degree();
  if (degree < 0) throw PreconditionError("graph is not regular");
  if (h == 0) throw PreconditionError("clique size must be positive");
  if (c == 0) throw PreconditionError("constant c must be positive");
  const std::size_t k = (c + 2) * h;
  if (g.k() != k) {
    throw PreconditionError("counting function must be defined for k = (c+2)h = " +
                            std::to_string(k));
  }
  if (!is_convex(g)) throw PreconditionError("counting function is not convex");
  const auto sing_opt = singularity(g);
  if (sing_opt.infinite()) {
    throw PreconditionError("counting function is linear (no singularity)");
  }
  const std::size_t sing = *sing_opt.value;
  if (c * (k - sing) < k) {
    throw PreconditionError("need k - sing(g) >= k/c");
  }

  CliqueReduction out{Election({"x"}, {{0}}), k, Rational(0),
                      normalize_for_clique(g)};
  const CountingFunction& ng = out.g;
  const Rational gk = ng(k);
  if (boost::multiprecision::denominator(gk) != 1) {
    throw PreconditionError("normalized g(k) is not an integer");
  }
  const std::size_t gk_int = static_cast<std::size_t>(to_int64(
      boost::multiprecision::numerator(gk)));

  if (h > static_cast<std::size_t>(degree) + 1) {
    out.fixed_no_instance = true;
    std::vector<Vote> votes{identity(2 * k)};
    out.election = Election(default_labels(2 * k), std::move(votes));
    out.target = gk + 1;
    return out;
  }

  const std::size_t vertices = graph.vertex_count;
  const std::size_t edge_count = graph.edges.size();
  const std::size_t edge_fillers = sing - 2;
  const std::size_t general_fillers = k - h - edge_fillers;
  out.vertex_candidates = vertices;
  out.edge_fillers = edge_fillers;
  out.general_fillers = general_fillers;

  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertices; ++v) labels.push_back("v" + std::to_string(v));
  for (std::size_t i = 0; i < edge_fillers; ++i) labels.push_back("c" + std::to_string(i + 1));
  for (std::size_t i = 0; i < general_fillers; ++i) labels.push_back("b" + std::to_string(i + 1));
  const auto edge_filler_base = static_cast<Candidate>(vertices);
  const auto general_filler_base = static_cast<Candidate>(vertices + edge_fillers);

  const std::size_t per_edge = 2 * gk_int;
  const std::size_t filler_voters = 2 * gk_int * (edge_count + h) * gk_int;
  std::vector<std::vector<Candidate>> tops;
  tops.reserve(per_edge * edge_count + filler_voters);
  auto add_dummies = [&](std::vector<Candidate>& top, std::size_t count) {
    const std::size_t voter = tops.size() + 1;
    for (std::size_t i = 0; i < count; ++i) {
      top.push_back(static_cast<Candidate>(labels.size()));
      labels.push_back("dummy_" + std::to_string(voter) + "_" + std::to_string(i + 1));
    }
  };
  for (auto [u, v] : graph.edges) {
    for (std::size_t r = 0; r < per_edge; ++r) {
      std::vector<Candidate> top{u, v};
      for (std::size_t i = 0; i < edge_fillers; ++i) top.push_back(edge_filler_base + i);
      add_dummies(top, k - sing);
      tops.push_back(std::move(top));
    }
  }
  for (std::size_t r = 0; r < filler_voters; ++r) {
    std::vector<Candidate> top;
    for (std::size_t i = 0; i < edge_fillers; ++i) top.push_back(edge_filler_base + i);
    for (std::size_t i = 0; i < general_fillers; ++i) top.push_back(general_filler_base + i);
    add_dummies(top, h);
    tops.push_back(std::move(top));
  }
  std::vector<Vote> votes;
  votes.reserve(tops.size());
  for (const auto& top : tops) votes.push_back(complete_ranking(top, labels.size()));
  out.election = Election(std::move(labels), std::move(votes));

  const Rational two_gk = 2 * gk;
  const Rational base = ng(sing - 2);
  const Rational first_step = ng(sing - 1) - base;
  const Rational t1 = two_gk * Rational(edge_count + h) * gk * ng(k - h);
  const Rational t2 = two_gk * Rational(edge_count) * base;
  const Rational t3 = two_gk * Rational(static_cast<std::size_t>(degree) * h) * first_step;
  const Rational t4 = two_gk * Rational(h * (h - 1) / 2) *
                      (ng(sing) - base - 2 * first_step);
  out.target = t1 + t2 + t3 + t4;
  return out;
}

}  // namespace committee
