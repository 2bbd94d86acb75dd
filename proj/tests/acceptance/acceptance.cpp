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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "committee/axioms.hpp"
#include "committee/election_io.hpp"
#include "committee/errors.hpp"
#include "committee/fpt.hpp"
#include "committee/generators.hpp"
#include "committee/winners.hpp"
#include "oracle.hpp"

namespace committee {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string first_failure;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) first_failure = what;
    ok = ok && condition;
  }
};

std::string fixture_path(const std::string& name) {
  return std::string(COMMITTEE_FIXTURES) + "/" + name;
}

std::string slurp(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Committee by_labels(const Election& e, std::initializer_list<const char*> labels) {
  std::vector<Candidate> members;
  for (const char* label : labels) members.push_back(*e.find(label));
  return Committee(std::move(members));
}

bool unique_winner(const WinnerResult& r, const Committee& expected) {
  return !r.truncated && r.winners.size() == 1 && r.winners.front() == expected;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

Check criterion1() {
  Check check;
  const auto start = Clock::now();
  const auto file = read_election_file(fixture_path("eight_voters.elec"));
  const Election& e = file.election;
  const std::size_t m = e.num_candidates();
  check.require(m == 8 && e.num_voters() == 8 && file.k == 2, "fixture shape");

  const auto run = [&](Rule rule) { return brute_force_winners(builtin(rule, m, 2), e); };
  check.require(unique_winner(run(Rule::kSntv), by_labels(e, {"a", "b"})), "SNTV {a,b}");
  check.require(unique_winner(run(Rule::kBloc), by_labels(e, {"e", "f"})), "Bloc {e,f}");
  check.require(unique_winner(run(Rule::kKBorda), by_labels(e, {"g", "h"})), "k-Borda {g,h}");
  check.require(unique_winner(run(Rule::kBetaCc), by_labels(e, {"c", "d"})), "beta-CC {c,d}");
  const auto cc = run(Rule::kAlphaCc);
  check.require(unique_winner(cc, by_labels(e, {"e", "f"})), "alpha-CC {e,f}");
  check.require(cc.best_score == 6, "alpha-CC score 6");

  const auto borda = builtin(Rule::kKBorda, m, 1);
  const int expected[] = {32, 22, 23, 23, 28, 26, 35, 35};
  std::ostringstream scores;
  for (Candidate c = 0; c < m; ++c) {
    const Rational s = committee_score(borda, e, Committee{c});
    scores << (c ? "," : "") << s;
    check.require(s == expected[c], "Borda score of " + e.label(c));
  }
  const double elapsed = seconds_since(start);
  check.require(elapsed < 1.0, "runtime under 1 s");
  check.detail = "Borda scores (" + scores.str() + "), " + fmt_seconds(elapsed);
  return check;
}

Check criterion2() {
  Check check;
  const auto file = read_election_file(fixture_path("eight_voters.elec"));
  const Election& e = file.election;
  const auto r = perfectionist_winners(e, 2);
  check.require(unique_winner(r, by_labels(e, {"a", "f"})), "winner {a,f}");
  check.require(r.best_score == 2, "score 2");
  const auto f = builtin(Rule::kPerfectionist, 8, 2);
  const std::vector<Committee> ones = {
      by_labels(e, {"b", "c"}), by_labels(e, {"b", "d"}), by_labels(e, {"c", "e"}),
      by_labels(e, {"d", "e"}), by_labels(e, {"e", "g"}), by_labels(e, {"f", "h"})};
  for (const auto& w : ones) {
    check.require(committee_score(f, e, w) == 1, "score 1 for " + e.format(w));
  }
  std::size_t zero = 0;
  for (Candidate a = 0; a < 8; ++a) {
    for (Candidate b = a + 1; b < 8; ++b) zero += committee_score(f, e, Committee{a, b}) == 0;
  }
  check.require(zero == 28 - 7, "every other committee scores 0");
  check.detail = "{a,f} = 2, six committees = 1, " + std::to_string(zero) + " committees = 0";
  return check;
}

Check criterion3() {
  Check check;
  const auto file = read_election_file(fixture_path("counterexample.elec"));
  const Election& e = file.election;
  const auto verdict = [&](Rule rule) {
    return empirical_fm_check(builtin(rule, 4, 2), e).verdict;
  };
  check.require(verdict(Rule::kAlphaCc) == FmVerdict::kFail, "alpha-CC fails");
  check.require(verdict(Rule::kSntv) == FmVerdict::kFail, "SNTV fails");
  check.require(verdict(Rule::kBloc) == FmVerdict::kPass, "Bloc passes");
  check.require(verdict(Rule::kPerfectionist) == FmVerdict::kPass, "Perfectionist passes");
  check.detail = "alpha-CC fail, SNTV fail, Bloc pass, Perfectionist pass";
  return check;
}

Check criterion4() {
  Check check;
  const auto start = Clock::now();
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t profiles = 0;
  for (std::size_t k : {2u, 3u}) {
    const std::size_t m = 2 * k;
    for (const auto& values : oracle::all_counting(k, 3)) {
      const CountingFunction g(values);
      const auto eval = counting_evaluator(g, m);
      const std::string name = "g = " + g.to_string();
      if (fm_condition_check(g).satisfies) {
        ++yes;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
          const std::size_t n = 1 + seed % 9;
          const auto p = gen_fixed_majority_profile(m, n, k, 1000 * k + seed);
          check.require(empirical_fm_check(eval, p.election).verdict == FmVerdict::kPass,
                        name + " seed " + std::to_string(seed));
          ++profiles;
        }
      } else {
        ++no;
        const auto w = witness_counting(g, m);
        check.require(w.has_value() && verify_witness(*w, eval), name + " witness");
      }
    }
  }
  const double elapsed = seconds_since(start);
  check.require(elapsed < 300, "runtime under 5 min");
  check.detail = std::to_string(yes) + " yes-verdicts over " + std::to_string(profiles) +
                 " profiles, " + std::to_string(no) + " confirmed witnesses, " +
                 fmt_seconds(elapsed);
  return check;
}

struct RandomInstance {
  std::size_t m;
  std::size_t k;
  Election election;
};

RandomInstance random_instance(std::mt19937_64& rng, std::size_t min_k = 1) {
  const std::size_t m = oracle::pick(rng, std::max<std::size_t>(2, min_k), 10);
  const std::size_t k = oracle::pick(rng, min_k, std::min<std::size_t>(m, 4));
  return {m, k, oracle::random_election(rng, m, oracle::pick(rng, 1, 6))};
}

Rational brute(const CountingFunction& g, const Election& e) {
  return brute_force_winners(counting_evaluator(g, e.num_candidates()), e).best_score;
}

Check criterion5() {
  Check check;
  std::mt19937_64 rng(5);
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    const auto r = perfectionist_winners(in.election, in.k);
    check.require(r.best_score == brute(CountingFunction::step(in.k), in.election),
                  "perfectionist instance " + std::to_string(i));
  }
  int direct = 0;
  for (int i = 0; i < rounds;) {
    const auto in = random_instance(rng, 2);
    const CountingFunction g(oracle::random_counting(rng, in.k, 4));
    const auto sing = singularity(g);
    if (sing.infinite()) continue;
    const std::size_t q = in.k - *sing.value;
    const auto r = near_perfectionist_winners(g, in.election, q);
    direct += r.algorithm == "near-perfectionist";
    check.require(r.best_score == brute(g, in.election),
                  "near-perfectionist instance " + std::to_string(i));
    ++i;
  }
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    std::vector<Rational> gamma(in.m);
    std::vector<std::size_t> raw(in.m);
    for (auto& x : raw) x = oracle::pick(rng, 0, 5);
    std::sort(raw.rbegin(), raw.rend());
    for (std::size_t p = 0; p < in.m; ++p) gamma[p] = Rational(raw[p]);
    const SingleWinnerScoring s(gamma);
    const ScoringEvaluator eval("separable", in.m, in.k, WeaklySeparable{s});
    const auto r = separable_winners(s, in.election, in.k);
    check.require(r.best_score == brute_force_winners(eval, in.election).best_score,
                  "separable instance " + std::to_string(i));
  }
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    const CountingFunction g(oracle::random_concave(rng, in.k));
    const auto r = fpt_voters_winners(g, in.election);
    check.require(r.best_score == brute(g, in.election), "fpt-voters instance " + std::to_string(i));
  }
  check.detail = std::to_string(rounds) + " instances per algorithm; near-perfectionist used " +
                 "the direct path on " + std::to_string(direct);
  return check;
}

Check criterion6() {
  Check check;
  std::mt19937_64 rng(6);
  double worst = 2;
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    const CountingFunction g(oracle::random_concave(rng, in.k));
    const Rational greedy = greedy_concave(g, in.election).best_score;
    const Rational best = brute(g, in.election);
    if (best == 0) {
      check.require(greedy == 0, "zero optimum");
      continue;
    }
    const double ratio = Rational(greedy / best).convert_to<double>();
    worst = std::min(worst, ratio);
    check.require(ratio >= 1 - 1 / std::exp(1.0), "ratio on instance " + std::to_string(i));
  }
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    const auto g = CountingFunction::linear(in.k);
    check.require(greedy_concave(g, in.election).best_score == brute(g, in.election),
                  "linear g instance " + std::to_string(i));
  }
  std::ostringstream out;
  out.precision(4);
  out << "worst concave ratio " << worst << " over " << rounds
      << " instances, linear g ratio 1 on " << rounds;
  check.detail = out.str();
  return check;
}

Check criterion7() {
  Check check;
  const auto file = read_election_file(fixture_path("six_voters.elec"));
  const Election& e = file.election;
  const auto p = build_voter_partition(e, 3);
  const auto mask = [](std::initializer_list<int> voters) {
    VoterMask out = 0;
    for (int v : voters) out |= VoterMask{1} << (v - 1);
    return out;
  };
  const std::vector<std::pair<VoterMask, std::vector<std::string>>> expected = {
      {mask({3, 6}), {"a", "b"}},       {mask({1, 2, 3, 4}), {"c"}},
      {mask({1, 2, 5}), {"d"}},         {mask({2, 4, 5, 6}), {"e"}},
      {mask({1, 4, 5}), {"f"}}};
  check.require(p.groups().size() == expected.size(), "five nonempty groups");
  for (const auto& [voters, labels] : expected) {
    std::vector<std::string> got;
    for (Candidate c : p.candidates_of(voters)) got.push_back(e.label(c));
    check.require(got == labels, "group of " + labels.front());
  }
  std::size_t empty = 0;
  for (VoterMask s = 1; s < (VoterMask{1} << 6); ++s) {
    const bool listed = std::any_of(expected.begin(), expected.end(),
                                    [s](const auto& x) { return x.first == s; });
    if (!listed) {
      check.require(p.candidates_of(s).empty(), "unlisted voter set is empty");
      ++empty;
    }
  }
  check.detail = "5 groups match, " + std::to_string(empty) + " other voter sets empty";
  return check;
}

Check criterion8() {
  Check check;
  std::mt19937_64 rng(8);
  int instances = 0;
  int covers = 0;
  while (instances < 30) {
    X3cInstance x;
    x.universe_size = 3 * oracle::pick(rng, 1, 3);
    const std::size_t count = oracle::pick(rng, 1, 5);
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<std::uint32_t> all(x.universe_size);
      std::iota(all.begin(), all.end(), 0u);
      std::shuffle(all.begin(), all.end(), rng);
      x.sets.push_back({all[0], all[1], all[2]});
    }
    try {
      x.validate();
    } catch (const PreconditionError&) {
      continue;
    }
    const bool cover = oracle::naive_exact_cover(x.universe_size, x.sets);
    const auto r = gen_from_x3c(x);
    const auto eval = builtin(Rule::kAlphaCc, r.election.num_candidates(), r.k);
    const bool reached = brute_force_winners(eval, r.election).best_score >= r.target;
    check.require(reached == cover, "x3c instance " + std::to_string(instances));
    covers += cover;
    ++instances;
  }

  // The clique elections have k = 12 and thousands of candidates, far past
  // plain enumeration. They are decided by exact_counting_optimum, which is
  // first checked against brute force on random small elections.
  for (int i = 0; i < 200; ++i) {
    const auto in = random_instance(rng);
    const CountingFunction g(oracle::random_counting(rng, in.k, 4));
    check.require(exact_counting_optimum(g, in.election).best_score == brute(g, in.election),
                  "exact optimum vs brute force " + std::to_string(i));
  }
  std::vector<Rational> values{0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 7; ++i) values.push_back(values.back() + 2);
  const CountingFunction g(values);
  std::string clique_detail;
  for (const char* name : {"triangle.graph", "square.graph"}) {
    const Graph graph = Graph::parse(slurp(name));
    const auto r = gen_from_clique(graph, 3, g, 2);
    const bool reached = exact_counting_optimum(r.g, r.election).best_score >= r.target;
    check.require(reached == has_clique(graph, 3), std::string("clique ") + name);
    clique_detail += std::string(clique_detail.empty() ? "" : ", ") + name + " m=" +
                     std::to_string(r.election.num_candidates()) +
                     (reached ? " reaches T" : " below T");
  }
  check.detail = std::to_string(instances) + " X3C instances by brute force (" +
                 std::to_string(covers) + " covers); clique by exact counting optimum: " +
                 clique_detail;
  return check;
}

Check criterion9() {
  Check check;
  const std::size_t m = 8;
  std::size_t functions = 0;
  std::size_t sequences = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<PositionSequence> all;
    std::vector<Candidate> prefix;
    oracle::subsets(m, k, prefix, 0, [&](const std::vector<Candidate>& s) {
      std::vector<std::size_t> positions;
      for (Candidate c : s) positions.push_back(c + 1);
      all.emplace_back(std::move(positions));
    });
    for (const auto& values : oracle::all_counting(k, 3)) {
      const CountingFunction g(values);
      const ScoringEvaluator counting("counting", m, k, TopKCounting{g});
      const ScoringEvaluator owa("owa", m, k,
                                 OwaBased{counting_to_owa(g), SingleWinnerScoring::approval(k, m)});
      for (const auto& p : all) {
        check.require(counting.eval(p) == owa.eval(p), "g = " + g.to_string());
      }
      ++functions;
      sequences += all.size();
    }
  }
  check.detail = std::to_string(functions) + " counting functions, " +
                 std::to_string(sequences) + " sequence comparisons";
  return check;
}

Check criterion10() {
  Check check;
  std::mt19937_64 rng(10);
  const int rounds = 300;
  for (int i = 0; i < rounds; ++i) {
    const auto in = random_instance(rng);
    const CountingFunction g(oracle::random_concave(rng, in.k));
    const auto outcome = fpt_voters_solve(g, in.election);
    const auto& sol = outcome.solution;
    for (std::size_t v = 0; v < in.election.num_voters(); ++v) {
      Rational row = 0;
      for (std::size_t j = 1; j <= in.k; ++j) {
        const Rational& x = sol.x_relaxed[v][j - 1];
        check.require(x == 0 || x == 1, "integral x on instance " + std::to_string(i));
        row += x;
      }
      check.require(row == Rational(sol.x[v]), "sum_j x_ij = x_i on instance " + std::to_string(i));
    }
    check.require(outcome.program.objective(sol.x_relaxed) == outcome.result.best_score,
                  "objective equals committee score on instance " + std::to_string(i));
  }
  check.detail = std::to_string(rounds) + " optimal solutions integral and consistent";
  return check;
}

}  // namespace
}  // namespace committee

int main() {
  using namespace committee;
  const std::pair<const char*, Check (*)()> criteria[] = {
      {"eight-voter winners", criterion1},
      {"eight-voter Perfectionist scores", criterion2},
      {"fixed-majority counterexample", criterion3},
      {"characterization agreement", criterion4},
      {"oracle equivalence", criterion5},
      {"greedy guarantee", criterion6},
      {"partition fixture", criterion7},
      {"reduction soundness", criterion8},
      {"OWA equivalence", criterion9},
      {"MILP exactness witness", criterion10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check check;
    try {
      check = run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.first_failure = std::string("exception: ") + e.what();
    }
    std::cout << (check.ok ? "PASS" : "FAIL") << " [" << index << "] " << name << ": "
              << (check.ok ? check.detail : check.first_failure) << std::endl;
    failures += !check.ok;
  }
  return failures == 0 ? 0 : 1;
}
