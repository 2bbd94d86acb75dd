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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "committee/election_io.hpp"
#include "committee/errors.hpp"
#include "committee/winners.hpp"
#include "oracle.hpp"

namespace committee {
namespace {

ElectionFile eight_voters() {
  return read_election_file(std::string(COMMITTEE_FIXTURES) + "/eight_voters.elec");
}

Committee named(const Election& e, std::initializer_list<std::string_view> labels) {
  std::vector<Candidate> members;
  for (auto l : labels) members.push_back(*e.find(l));
  return Committee(std::move(members));
}

std::vector<Committee> as_committees(const std::vector<std::vector<Candidate>>& raw) {
  std::vector<Committee> out;
  for (const auto& r : raw) out.emplace_back(r);
  return out;
}

TEST(BruteForce, EightVoterWinners) {
  const auto file = eight_voters();
  const auto& e = file.election;
  auto unique_winner = [&](Rule rule) {
    const auto r = brute_force_winners(builtin(rule, 8, 2), e);
    EXPECT_EQ(r.winners.size(), 1u) << rule_name(rule);
    return r.winners.front();
  };
  EXPECT_EQ(unique_winner(Rule::kSntv), named(e, {"a", "b"}));
  EXPECT_EQ(unique_winner(Rule::kBloc), named(e, {"e", "f"}));
  EXPECT_EQ(unique_winner(Rule::kBetaCc), named(e, {"c", "d"}));
  EXPECT_EQ(unique_winner(Rule::kKBorda), named(e, {"g", "h"}));
  const auto cc = brute_force_winners(builtin(Rule::kAlphaCc, 8, 2), e);
  EXPECT_EQ(cc.best_score, 6);
  EXPECT_EQ(cc.algorithm, "brute-force");
  EXPECT_TRUE(cc.exact);
}

TEST(BruteForce, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 60; ++round) {
    const std::size_t m = oracle::pick(rng, 2, 8);
    const std::size_t k = oracle::pick(rng, 1, std::min<std::size_t>(m, 4));
    const std::size_t n = oracle::pick(rng, 1, 6);
    const Election e = oracle::random_election(rng, m, n);
    const auto check = [&](const ScoringEvaluator& f, const oracle::PositionScore& ref) {
      const auto got = brute_force_winners(f, e);
      const auto want = oracle::naive_optimum(ref, e, k);
      EXPECT_EQ(got.best_score, want.best) << f.name();
      EXPECT_EQ(got.winners, as_committees(want.winners)) << f.name();
    };
    check(builtin(Rule::kKBorda, m, k), oracle::borda(m));
    check(builtin(Rule::kBetaCc, m, k), oracle::chamberlin_courant(m));
    check(builtin(Rule::kSntv, m, k), oracle::sntv());
    const auto g = oracle::random_counting(rng, k, 3);
    check(counting_evaluator(CountingFunction(g), m), oracle::counting(g));
    const std::size_t t = oracle::pick(rng, 1, m);
    check(builtin(Rule::kAlphaPav, m, k, t), oracle::pav(t));
  }
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(8);
  const Election e = oracle::random_election(rng, 14, 9);
  const auto f = builtin(Rule::kAlphaCc, 14, 4);
  WinnerOptions serial;
  WinnerOptions parallel;
  parallel.threads = 4;
  const auto a = brute_force_winners(f, e, serial);
  const auto b = brute_force_winners(f, e, parallel);
  EXPECT_EQ(a.winners, b.winners);
  EXPECT_EQ(a.best_score, b.best_score);
  EXPECT_EQ(a.truncated, b.truncated);
}

TEST(BruteForce, CapAndTruncation) {
  std::mt19937_64 rng(3);
  const Election big = oracle::random_election(rng, 40, 2);
  EXPECT_THROW(brute_force_winners(builtin(Rule::kBloc, 40, 10), big), CapExceeded);

  const Election one(default_labels(10), {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
  WinnerOptions options;
  options.tie_cap = 5;
  const auto r = brute_force_winners(builtin(Rule::kSntv, 10, 3), one, options);
  EXPECT_TRUE(r.truncated);
  ASSERT_EQ(r.winners.size(), 1u);
  EXPECT_EQ(r.winners.front(), (Committee{0, 1, 2}));
  const auto s = separable_winners(SingleWinnerScoring::approval(1, 10), one, 3, options);
  EXPECT_TRUE(s.truncated);
  EXPECT_EQ(s.winners, r.winners);
  options.tie_cap = 36;
  EXPECT_EQ(brute_force_winners(builtin(Rule::kSntv, 10, 3), one, options).winners.size(), 36u);
  EXPECT_EQ(separable_winners(SingleWinnerScoring::approval(1, 10), one, 3, options)
                .winners.size(),
            36u);
}

TEST(Separable, EightVoters) {
  const auto file = eight_voters();
  const auto& e = file.election;
  const auto bloc = separable_winners(SingleWinnerScoring::approval(2, 8), e, 2);
  EXPECT_EQ(bloc.winners, std::vector<Committee>{named(e, {"e", "f"})});
  const auto borda = separable_winners(SingleWinnerScoring::borda(8), e, 2);
  EXPECT_EQ(borda.winners, std::vector<Committee>{named(e, {"g", "h"})});
  EXPECT_EQ(borda.best_score, 70);
}

TEST(Separable, UnanimousVotes) {
  const Vote v{3, 1, 4, 0, 2, 5};
  const Election e(default_labels(6), {v, v, v});
  const auto r = separable_winners(SingleWinnerScoring::borda(6), e, 3);
  EXPECT_EQ(r.winners, (std::vector<Committee>{Committee{1, 3, 4}}));
}

TEST(Separable, MatchesBruteForceIncludingTies) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 150; ++round) {
    const std::size_t m = oracle::pick(rng, 2, 9);
    const std::size_t k = oracle::pick(rng, 1, std::min<std::size_t>(m, 4));
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 5));
    for (Rule rule : {Rule::kSntv, Rule::kBloc, Rule::kKBorda}) {
      const auto f = builtin(rule, m, k);
      const auto fast = separable_winners(*f.separable_scores(), e, k);
      const auto slow = brute_force_winners(f, e);
      EXPECT_EQ(fast.best_score, slow.best_score);
      EXPECT_EQ(fast.winners, slow.winners);
    }
  }
}

TEST(Perfectionist, Cases) {
  const auto file = eight_voters();
  const auto& e = file.election;
  const auto r = perfectionist_winners(e, 2);
  EXPECT_EQ(r.winners, std::vector<Committee>{named(e, {"a", "f"})});
  EXPECT_EQ(r.best_score, 2);

  const Election single(default_labels(5), {{4, 2, 0, 1, 3}});
  const auto s = perfectionist_winners(single, 2);
  EXPECT_EQ(s.winners, (std::vector<Committee>{Committee{2, 4}}));
  EXPECT_EQ(s.best_score, 1);

  const Election shared(default_labels(5), {{0, 1, 2, 3, 4}, {1, 0, 2, 4, 3}, {0, 1, 2, 4, 3}});
  const auto t = perfectionist_winners(shared, 3);
  EXPECT_EQ(t.winners, (std::vector<Committee>{Committee{0, 1, 2}}));
  EXPECT_EQ(t.best_score, 3);
}

TEST(Perfectionist, MatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = oracle::pick(rng, 2, 8);
    const std::size_t k = oracle::pick(rng, 1, std::min<std::size_t>(m, 4));
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 6));
    const auto fast = perfectionist_winners(e, k);
    const auto want = oracle::naive_optimum(oracle::perfectionist(k), e, k);
    EXPECT_EQ(fast.best_score, want.best);
    EXPECT_EQ(fast.winners, as_committees(want.winners));
  }
}

TEST(NearPerfectionist, BlocPlusPerfectionistMatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 50; ++round) {
    const std::size_t m = oracle::pick(rng, 4, 8);
    const std::size_t k = oracle::pick(rng, 2, m / 2);
    std::vector<Rational> g;
    for (std::size_t x = 0; x < k; ++x) g.push_back(Rational(x));
    g.push_back(Rational(k + 1));
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 6));
    const auto got = near_perfectionist_winners(CountingFunction(g), e, 0);
    const auto want = oracle::naive_optimum(oracle::counting(g), e, k);
    EXPECT_EQ(got.best_score, want.best);
    EXPECT_EQ(got.winners, as_committees(want.winners));
    EXPECT_EQ(got.algorithm, "near-perfectionist");
  }
}

TEST(NearPerfectionist, SpecialCases) {
  const auto file = eight_voters();
  const auto& e = file.election;
  const auto perf = near_perfectionist_winners(CountingFunction::step(2), e, 0);
  EXPECT_EQ(perf.winners, perfectionist_winners(e, 2).winners);
  EXPECT_EQ(perf.best_score, 2);
  const auto bloc = near_perfectionist_winners(CountingFunction::linear(2), e, 0);
  const auto sep = separable_winners(SingleWinnerScoring::approval(2, 8), e, 2);
  EXPECT_EQ(bloc.winners, sep.winners);
  EXPECT_EQ(bloc.best_score, sep.best_score);
  std::mt19937_64 rng(1);
  const Election nine = oracle::random_election(rng, 9, 3);
  EXPECT_THROW(near_perfectionist_winners(CountingFunction({0, 0, 1, 1, 1}), nine, 1),
               PreconditionError);
}

TEST(NearPerfectionist, RandomValidCountingFunctions) {
  std::mt19937_64 rng(13);
  int direct = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = oracle::pick(rng, 4, 9);
    const std::size_t k = oracle::pick(rng, 2, std::min<std::size_t>(4, m / 2));
    const auto g = oracle::random_counting(rng, k, 3);
    const CountingFunction cg(g);
    const auto sing = singularity(cg);
    const std::size_t q = sing.infinite() ? 0 : k - *sing.value;
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 6));
    const auto got = near_perfectionist_winners(cg, e, q);
    const auto want = oracle::naive_optimum(oracle::counting(g), e, k);
    EXPECT_EQ(got.best_score, want.best) << cg.to_string();
    EXPECT_EQ(got.winners, as_committees(want.winners)) << cg.to_string();
    direct += got.algorithm == "near-perfectionist";
  }
  EXPECT_GT(direct, 100);
}

TEST(NearPerfectionist, FewerThanTwoKCandidates) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t k = oracle::pick(rng, 2, 4);
    const std::size_t m = oracle::pick(rng, k, 2 * k - 1);
    const auto g = oracle::random_counting(rng, k, 3);
    const CountingFunction cg(g);
    const auto sing = singularity(cg);
    const std::size_t q = sing.infinite() ? 0 : k - *sing.value;
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 6));
    const auto want = oracle::naive_optimum(oracle::counting(g), e, k);
    EXPECT_EQ(near_perfectionist_winners(cg, e, q).winners, as_committees(want.winners))
        << cg.to_string();
  }
}

TEST(Greedy, EightVotersAndLinear) {
  const auto file = eight_voters();
  const auto& e = file.election;
  const auto cc = greedy_concave(CountingFunction::indicator(2), e);
  EXPECT_EQ(cc.best_score, 6);
  EXPECT_FALSE(cc.exact);
  const auto bloc = greedy_concave(CountingFunction::linear(2), e);
  EXPECT_EQ(bloc.best_score,
            separable_winners(SingleWinnerScoring::approval(2, 8), e, 2).best_score);
  EXPECT_THROW(greedy_concave(CountingFunction::step(2), e), PreconditionError);
}

TEST(Greedy, ApproximationRatio) {
  std::mt19937_64 rng(14);
  const double bound = 1.0 - 1.0 / std::exp(1.0);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = oracle::pick(rng, 2, 10);
    const std::size_t k = oracle::pick(rng, 1, std::min<std::size_t>(m, 4));
    const auto g = oracle::random_concave(rng, k);
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 8));
    const auto got = greedy_concave(CountingFunction(g), e);
    const auto want = oracle::naive_optimum(oracle::counting(g), e, k);
    EXPECT_EQ(got.best_score, counting_score(CountingFunction(g), e, got.winners.front()));
    if (want.best == 0) {
      EXPECT_EQ(got.best_score, 0);
      continue;
    }
    const Rational ratio = got.best_score / want.best;
    EXPECT_GE(ratio.convert_to<double>(), bound);
    if (is_linear(CountingFunction(g))) EXPECT_EQ(ratio, 1);
  }
}

TEST(Greedy, SubmodularityOfConcaveObjective) {
  std::mt19937_64 rng(15);
  for (int round = 0; round < 100; ++round) {
    const std::size_t m = oracle::pick(rng, 3, 9);
    const std::size_t k = oracle::pick(rng, 1, m - 1);
    const auto g = oracle::random_concave(rng, k);
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 6));
    auto value = [&](const std::vector<char>& in) {
      Rational total = 0;
      for (const Vote& v : e.votes()) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < k; ++i) hits += in[v[i]];
        total += g[std::min(hits, k)];
      }
      return total;
    };
    std::vector<char> b(m, 0);
    std::vector<char> a(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
      b[c] = oracle::pick(rng, 0, 1);
      a[c] = b[c] && oracle::pick(rng, 0, 1);
    }
    std::size_t inside = 0;
    for (auto x : b) inside += x;
    if (inside + 1 > k) continue;
    for (Candidate c = 0; c < m; ++c) {
      if (b[c]) continue;
      auto a2 = a;
      auto b2 = b;
      a2[c] = b2[c] = 1;
      EXPECT_GE(value(a2) - value(a), value(b2) - value(b));
    }
  }
}

TEST(ExactCounting, MatchesNaiveOracle) {
  std::mt19937_64 rng(16);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = oracle::pick(rng, 2, 10);
    const std::size_t k = oracle::pick(rng, 1, std::min<std::size_t>(m, 4));
    const auto g = oracle::random_counting(rng, k, 5);
    const Election e = oracle::random_election(rng, m, oracle::pick(rng, 1, 5));
    const auto got = exact_counting_optimum(CountingFunction(g), e);
    const auto want = oracle::naive_optimum(oracle::counting(g), e, k);
    EXPECT_EQ(got.best_score, want.best);
    ASSERT_EQ(got.winners.size(), 1u);
    EXPECT_EQ(counting_score(CountingFunction(g), e, got.winners.front()), want.best);
    EXPECT_FALSE(got.ties_complete);
  }
}

TEST(ExactCounting, ManyPrivateAndInertCandidates) {
  // Two voters sharing one candidate, plus a long unranked tail.
  std::vector<Candidate> first{0, 1, 2, 3};
  std::vector<Candidate> second{0, 4, 5, 6};
  for (Candidate c = 7; c < 30; ++c) {
    first.push_back(c);
    second.push_back(c);
  }
  for (Candidate c : {4, 5, 6}) first.push_back(c);
  for (Candidate c : {1, 2, 3}) second.push_back(c);
  const Election e(default_labels(30), {first, second});
  const auto r = exact_counting_optimum(CountingFunction::step(4), e);
  EXPECT_EQ(r.best_score, 1);
  const auto cc = exact_counting_optimum(CountingFunction({0, 1, 1, 1, 1}), e);
  EXPECT_EQ(cc.best_score, 2);
  EXPECT_EQ(counting_score(CountingFunction({0, 1, 1, 1, 1}), e, cc.winners.front()), 2);
}

TEST(ExistsCommittee, Thresholds) {
  const auto file = eight_voters();
  const auto& e = file.election;
  const auto cc = builtin(Rule::kAlphaCc, 8, 2);
  EXPECT_TRUE(exists_committee_with_score(cc, e, 6));
  EXPECT_TRUE(exists_committee_with_score(cc, e, 0));
  EXPECT_FALSE(exists_committee_with_score(cc, e, 7));
  WinnerOptions tiny;
  tiny.enumeration_cap = 25;
  EXPECT_TRUE(exists_committee_with_score(cc, e, 6, tiny));
  EXPECT_FALSE(exists_committee_with_score(cc, e, 7, tiny));
  EXPECT_THROW(exists_committee_with_score(builtin(Rule::kKBorda, 8, 2), e, 7, tiny),
               CapExceeded);
}

}  // namespace
}  // namespace committee
