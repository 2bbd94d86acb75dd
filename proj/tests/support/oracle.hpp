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
// Reference implementations used only by the tests. Everything here is
// written from the rule definitions directly and shares no code with the
// library's scoring or search paths.

#ifndef COMMITTEE_TESTS_ORACLE_HPP_
#define COMMITTEE_TESTS_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"

namespace committee::oracle {

// Per-voter committee score from sorted 1-based positions.
using PositionScore = std::function<Rational(const std::vector<std::size_t>&)>;

inline std::size_t naive_position(const Vote& vote, Candidate c) {
  for (std::size_t i = 0; i < vote.size(); ++i) {
    if (vote[i] == c) return i + 1;
  }
  return 0;
}

inline std::vector<std::size_t> naive_positions(const Vote& vote,
                                                const std::vector<Candidate>& members) {
  std::vector<std::size_t> out;
  for (Candidate c : members) out.push_back(naive_position(vote, c));
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational naive_score(const PositionScore& f, const Election& election,
                            const std::vector<Candidate>& members) {
  Rational total = 0;
  for (const Vote& vote : election.votes()) total += f(naive_positions(vote, members));
  return total;
}

// All size-k subsets of 0..m-1, generated recursively in lexicographic order.
inline void subsets(std::size_t m, std::size_t k, std::vector<Candidate>& prefix,
                    Candidate next,
                    const std::function<void(const std::vector<Candidate>&)>& visit) {
  if (prefix.size() == k) {
    visit(prefix);
    return;
  }
  for (Candidate c = next; c < m; ++c) {
    if (m - c < k - prefix.size()) break;
    prefix.push_back(c);
    subsets(m, k, prefix, c + 1, visit);
    prefix.pop_back();
  }
}

struct Optimum {
  Rational best = -1;
  std::vector<std::vector<Candidate>> winners;
};

inline Optimum naive_optimum(const PositionScore& f, const Election& election,
                             std::size_t k) {
  Optimum out;
  std::vector<Candidate> prefix;
  subsets(election.num_candidates(), k, prefix, 0,
          [&](const std::vector<Candidate>& members) {
            const Rational s = naive_score(f, election, members);
            if (s > out.best) {
              out.best = s;
              out.winners.clear();
            }
            if (s == out.best) out.winners.push_back(members);
          });
  return out;
}

// Rule definitions, straight from the formulas.
inline PositionScore sntv() {
  return [](const std::vector<std::size_t>& p) {
    return Rational(std::count(p.begin(), p.end(), std::size_t{1}));
  };
}
inline PositionScore bloc(std::size_t k) {
  return [k](const std::vector<std::size_t>& p) {
    return Rational(std::count_if(p.begin(), p.end(), [k](std::size_t x) { return x <= k; }));
  };
}
inline PositionScore borda(std::size_t m) {
  return [m](const std::vector<std::size_t>& p) {
    Rational s = 0;
    for (auto x : p) s += Rational(m - x);
    return s;
  };
}
inline PositionScore chamberlin_courant(std::size_t m) {
  return [m](const std::vector<std::size_t>& p) { return Rational(m - p.front()); };
}
inline PositionScore approval_cc(std::size_t k) {
  return [k](const std::vector<std::size_t>& p) { return Rational(p.front() <= k ? 1 : 0); };
}
inline PositionScore perfectionist(std::size_t k) {
  return [k](const std::vector<std::size_t>& p) { return Rational(p.back() == k ? 1 : 0); };
}
inline PositionScore counting(const std::vector<Rational>& g) {
  const std::size_t k = g.size() - 1;
  return [g, k](const std::vector<std::size_t>& p) {
    std::size_t hits = 0;
    for (auto x : p) hits += x <= k;
    return g[hits];
  };
}
inline PositionScore pav(std::size_t t) {
  return [t](const std::vector<std::size_t>& p) {
    Rational s = 0;
    std::size_t approved = 0;
    for (auto x : p) {
      if (x <= t) s += Rational(1, ++approved);
    }
    return s;
  };
}

// Test-side randomness, independent of the library generator.
inline Election random_election(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<Vote> votes;
  for (std::size_t v = 0; v < n; ++v) {
    Vote vote(m);
    std::iota(vote.begin(), vote.end(), Candidate{0});
    std::shuffle(vote.begin(), vote.end(), rng);
    votes.push_back(std::move(vote));
  }
  return Election(default_labels(m), std::move(votes));
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Nondecreasing g with g(0) = 0 and entries in 0..top.
inline std::vector<Rational> random_counting(std::mt19937_64& rng, std::size_t k,
                                             std::size_t top) {
  std::vector<std::size_t> raw(k);
  for (auto& x : raw) x = pick(rng, 0, top);
  std::sort(raw.begin(), raw.end());
  std::vector<Rational> g{0};
  for (auto x : raw) g.push_back(Rational(x));
  return g;
}

// Concave g: nonincreasing nonnegative differentials.
inline std::vector<Rational> random_concave(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::size_t> steps(k);
  for (auto& x : steps) x = pick(rng, 0, 4);
  std::sort(steps.rbegin(), steps.rend());
  std::vector<Rational> g{0};
  for (auto s : steps) g.push_back(g.back() + Rational(s));
  return g;
}

// Every nondecreasing g(0..k) with g(0) = 0 and entries in 0..top.
inline std::vector<std::vector<Rational>> all_counting(std::size_t k, std::size_t top) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> g{0};
  std::function<void(std::size_t)> grow = [&](std::size_t low) {
    if (g.size() == k + 1) {
      out.push_back(g);
      return;
    }
    for (std::size_t v = low; v <= top; ++v) {
      g.push_back(Rational(v));
      grow(v);
      g.pop_back();
    }
  };
  grow(0);
  return out;
}

// Exact cover by plain subset enumeration.
inline bool naive_exact_cover(std::size_t universe,
                              const std::vector<std::array<std::uint32_t, 3>>& sets) {
  const std::size_t s = sets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    std::vector<int> hits(universe, 0);
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1) {
        for (auto e : sets[i]) ++hits[e];
      }
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

}  // namespace committee::oracle

#endif  // COMMITTEE_TESTS_ORACLE_HPP_
