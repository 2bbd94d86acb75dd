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

// Instance generators: random profiles, planted fixed-majority profiles and
// the election constructions behind the X3C and regular-graph Clique
// hardness reductions.

#ifndef COMMITTEE_GENERATORS_HPP_
#define COMMITTEE_GENERATORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"
#include "committee/scoring.hpp"

namespace committee {

// n independent uniform permutations of m candidates.
Election gen_impartial_culture(std::size_t m, std::size_t n,
                               std::uint64_t seed);

struct FixedMajorityProfile {
  Election election;
  Committee planted;
};

// floor(n/2)+1 leading votes rank a random size-k committee W (shuffled)
// in their top k positions; the remaining votes are uniform.
FixedMajorityProfile gen_fixed_majority_profile(std::size_t m, std::size_t n,
                                                std::size_t k,
                                                std::uint64_t seed);

// Exact Cover by 3-Sets. Elements are 0-based internally and 1-based in
// text.
struct X3cInstance {
  std::size_t universe_size = 0;
  std::vector<std::array<std::uint32_t, 3>> sets;

  // Throws PreconditionError: universe not a multiple of 3, a set without
  // three distinct in-range elements, or an element in more than 3 sets.
  void validate() const;
  // Parses "x3c <universe>" followed by one "a,b,c" line per set.
  static X3cInstance parse(std::string_view text);
  std::string serialize() const;
};

// Independent oracle: does some subfamily partition the universe?
bool has_exact_cover(const X3cInstance& instance);

struct X3cReduction {
  Election election;
  std::size_t k = 0;
  Rational target;
  // Set candidates are 0..sets.size()-1 (padding sets follow the input).
  std::size_t padding_sets = 0;
  // Some element lies in no set (the instance is a trivial "no").
  bool uncovered_element = false;
};

// One candidate per set, one voter per element. Each voter ranks its
// containing sets first, then k private dummies, then everything else.
// Instances whose maximum element frequency exceeds n' = universe/3 are
// padded with disjoint forced triples until every containing set fits in
// the top k. An alpha_k-CC committee reaches `target` = 3k iff an exact
// cover exists.
X3cReduction gen_from_x3c(const X3cInstance& instance);

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  // Throws PreconditionError on self-loops, duplicate or out-of-range edges.
  void validate() const;
  std::vector<std::size_t> degrees() const;
  // Common degree, or -1 when not regular.
  long regular_degree() const;
  // Parses "<vertex_count>" followed by one "u v" line per edge (0-based).
  static Graph parse(std::string_view text);
};

// Independent oracle: does the graph contain h pairwise adjacent vertices?
bool has_clique(const Graph& graph, std::size_t h);

struct CliqueReduction {
  Election election;
  std::size_t k = 0;
  Rational target;
  // Counting function after normalization (scaling only).
  CountingFunction g;
  bool fixed_no_instance = false;
  // Candidate index ranges, for inspection.
  std::size_t vertex_candidates = 0;
  std::size_t edge_fillers = 0;
  std::size_t general_fillers = 0;
};

// Positive rescaling of a convex g so that g(i)-g(i-1) is 0 or 1 for
// i < sing(g) and g(sing)-g(sing-1) > 1. Throws PreconditionError when the
// result cannot be made integral or g is not convex with finite sing.
CountingFunction normalize_for_clique(const CountingFunction& g);

// Election from a regular graph, clique size h and a convex counting
// function over k = (c+2)h with k - sing(g) >= k/c. A committee of score
// >= target exists iff the graph has a size-h clique. When h > degree+1
// a fixed no-instance is returned.
CliqueReduction gen_from_clique(const Graph& graph, std::size_t h,
                                const CountingFunction& g, std::size_t c);

}  // namespace committee

#endif  // COMMITTEE_GENERATORS_HPP_
