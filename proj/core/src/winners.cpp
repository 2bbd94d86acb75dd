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
#include "committee/winners.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_set>

#include "committee/combinatorics.hpp"
#include "committee/errors.hpp"

namespace committee {
namespace {

void require_counting_fits(const CountingFunction& g, const Election& election) {
  if (g.k() == 0) throw PreconditionError("committee size k must be positive");
  if (g.k() > election.num_candidates()) {
    throw PreconditionError("committee size k = " + std::to_string(g.k()) +
                            " exceeds m = " +
                            std::to_string(election.num_candidates()));
  }
}

std::vector<std::int64_t> scaled_values(std::span<const Rational> values,
                                        BigInt& denominator) {
  const std::vector<Rational> copy(values.begin(), values.end());
  denominator = common_denominator(copy);
  std::vector<std::int64_t> out;
  out.reserve(copy.size());
  for (const auto& v : copy) {
    out.push_back(scaled_int64(v, denominator));
  }
  return out;
}

// in_top[v * m + c] == 1 iff voter v ranks c among its top k.
std::vector<char> top_k_matrix(const Election& election, std::size_t k) {
  const std::size_t m = election.num_candidates();
  std::vector<char> in_top(election.num_voters() * m, 0);
  for (std::size_t v = 0; v < election.num_voters(); ++v) {
    const Vote& vote = election.vote(v);
    for (std::size_t i = 0; i < k; ++i) in_top[v * m + vote[i]] = 1;
  }
  return in_top;
}

struct CountingScorer {
  CountingScorer(const CountingFunction& g, const Election& election)
      : k(g.k()), m(election.num_candidates()), n(election.num_voters()),
        table(scaled_values(g.values(), denominator)),
        in_top(top_k_matrix(election, g.k())) {}

  std::int64_t score(std::span<const Candidate> members) const {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const char* row = in_top.data() + v * m;
      std::size_t count = 0;
      for (Candidate c : members) count += row[c];
      total += table[count];
    }
    return total;
  }

  Rational unscale(std::int64_t value) const {
    return Rational(BigInt(value), denominator);
  }

  std::size_t k;
  std::size_t m;
  std::size_t n;
  BigInt denominator;
  std::vector<std::int64_t> table;
  std::vector<char> in_top;
};

struct CommitteeHash {
  std::size_t operator()(const std::vector<Candidate>& members) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Candidate c : members) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Collects the best-scoring committees in encounter order.
class TieCollector {
 public:
  explicit TieCollector(std::size_t cap) : cap_(cap) {}

  void offer(std::int64_t score, std::span<const Candidate> members) {
    if (!any_ || score > best_) {
      any_ = true;
      best_ = score;
      ties_.clear();
      count_ = 0;
    } else if (score < best_) {
      return;
    }
    ++count_;
    if (ties_.size() <= cap_) ties_.emplace_back(members.begin(), members.end());
  }

  bool any() const { return any_; }
  std::int64_t best() const { return best_; }
  std::uint64_t count() const { return count_; }
  const std::vector<std::vector<Candidate>>& ties() const { return ties_; }

 private:
  std::size_t cap_;
  bool any_ = false;
  std::int64_t best_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::vector<Candidate>> ties_;
};

// Sorts the collected ties and applies the truncation rule.
void fill_winners(WinnerResult& result,
                  std::vector<std::vector<Candidate>> ties,
                  std::uint64_t count, std::size_t cap) {
  std::sort(ties.begin(), ties.end());
  if (count > cap) {
    result.truncated = true;
    ties.resize(1);
  }
  for (auto& members : ties) result.winners.emplace_back(std::move(members));
}

void score_range(const CompiledEvaluator& compiled,
                 const std::vector<std::uint32_t>& positions, std::size_t m,
                 std::size_t n, std::size_t k, std::uint64_t first,
                 std::uint64_t count, TieCollector& out) {
  if (count == 0) return;
  auto combo = combination_unrank(first, m, k);
  const auto counting = compiled.counting_table();
  std::vector<std::size_t> buffer(k);
  for (std::uint64_t step = 0; step < count; ++step) {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t* row = positions.data() + v * m;
      if (!counting.empty()) {
        std::size_t hits = 0;
        for (std::size_t t = 0; t < k; ++t) hits += row[combo[t]] <= k;
        total += counting[hits];
        continue;
      }
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t p = row[combo[t]];
        std::size_t u = t;
        while (u > 0 && buffer[u - 1] > p) {
          buffer[u] = buffer[u - 1];
          --u;
        }
        buffer[u] = p;
      }
      total += compiled.score(buffer);
    }
    out.offer(total, combo);
    if (step + 1 < count) next_combination(combo, m);
  }
}

WinnerResult separable_impl(const std::vector<std::int64_t>& gamma,
                            const BigInt& denominator, const Election& election,
                            std::size_t k, const WinnerOptions& options) {
  const std::size_t m = election.num_candidates();
  std::vector<std::int64_t> score(m, 0);
  for (const Vote& vote : election.votes()) {
    for (std::size_t i = 0; i < m; ++i) score[vote[i]] += gamma[i];
  }
  std::vector<Candidate> order(m);
  for (Candidate c = 0; c < m; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](Candidate a, Candidate b) {
    return score[a] > score[b];
  });
  const std::int64_t threshold = score[order[k - 1]];
  std::vector<Candidate> above;
  std::vector<Candidate> tied;
  std::int64_t total = 0;
  for (Candidate c = 0; c < m; ++c) {
    if (score[c] > threshold) above.push_back(c);
    if (score[c] == threshold) tied.push_back(c);
  }
  for (std::size_t i = 0; i < k; ++i) total += score[order[i]];

  WinnerResult result;
  result.algorithm = "separable";
  result.best_score = Rational(BigInt(total), denominator);
  const std::size_t free_seats = k - above.size();
  const std::uint64_t count = binomial(tied.size(), free_seats);
  std::vector<std::vector<Candidate>> ties;
  if (count > options.tie_cap) {
    std::vector<Candidate> members = above;
    members.insert(members.end(), tied.begin(), tied.begin() + free_seats);
    std::sort(members.begin(), members.end());
    ties.push_back(std::move(members));
  } else {
    auto pick = first_combination(free_seats);
    do {
      std::vector<Candidate> members = above;
      for (auto i : pick) members.push_back(tied[i]);
      std::sort(members.begin(), members.end());
      ties.push_back(std::move(members));
    } while (next_combination(pick, tied.size()));
  }
  fill_winners(result, std::move(ties), count, options.tie_cap);
  return result;
}

}  // namespace

WinnerResult brute_force_winners(const ScoringEvaluator& evaluator,
                                 const Election& election,
                                 const WinnerOptions& options) {
  const std::size_t m = election.num_candidates();
  const std::size_t n = election.num_voters();
  const std::size_t k = evaluator.k();
  if (m != evaluator.m()) {
    throw PreconditionError("election has m = " + std::to_string(m) +
                            ", evaluator expects m = " +
                            std::to_string(evaluator.m()));
  }
  const std::uint64_t total = binomial(m, k);
  if (total > options.enumeration_cap) {
    throw CapExceeded("C(" + std::to_string(m) + "," + std::to_string(k) +
                      ") = " + std::to_string(total) +
                      " committees exceeds the enumeration cap of " +
                      std::to_string(options.enumeration_cap));
  }
  const CompiledEvaluator compiled(evaluator);
  std::vector<std::uint32_t> positions(n * m);
  for (std::size_t v = 0; v < n; ++v) {
    const Vote& vote = election.vote(v);
    for (std::size_t i = 0; i < m; ++i) {
      positions[v * m + vote[i]] = static_cast<std::uint32_t>(i + 1);
    }
  }

  const std::uint64_t workers = std::clamp<std::uint64_t>(
      options.threads, 1, std::max<std::uint64_t>(1, total / 1024));
  std::vector<TieCollector> chunks(workers, TieCollector(options.tie_cap));
  std::vector<std::uint64_t> starts(workers + 1);
  for (std::uint64_t w = 0; w <= workers; ++w) starts[w] = total * w / workers;
  if (workers == 1) {
    score_range(compiled, positions, m, n, k, 0, total, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        score_range(compiled, positions, m, n, k, starts[w],
                    starts[w + 1] - starts[w], chunks[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::int64_t best = 0;
  bool any = false;
  for (const auto& chunk : chunks) {
    if (chunk.any() && (!any || chunk.best() > best)) {
      best = chunk.best();
      any = true;
    }
  }
  std::uint64_t count = 0;
  std::vector<std::vector<Candidate>> ties;
  for (const auto& chunk : chunks) {
    if (!chunk.any() || chunk.best() != best) continue;
    count += chunk.count();
    for (const auto& t : chunk.ties()) {
      if (ties.size() <= options.tie_cap) ties.push_back(t);
    }
  }
  WinnerResult result;
  result.algorithm = "brute-force";
  result.best_score = compiled.unscale(best);
  fill_winners(result, std::move(ties), count, options.tie_cap);
  return result;
}

WinnerResult separable_winners(const SingleWinnerScoring& gamma,
                               const Election& election, std::size_t k,
                               const WinnerOptions& options) {
  const std::size_t m = election.num_candidates();
  if (gamma.num_positions() != m) {
    throw PreconditionError("scoring function covers " +
                            std::to_string(gamma.num_positions()) +
                            " positions, election has m = " +
                            std::to_string(m));
  }
  if (k == 0 || k > m) throw PreconditionError("need 1 <= k <= m");
  BigInt denominator;
  const auto scaled = scaled_values(gamma.values(), denominator);
  return separable_impl(scaled, denominator, election, k, options);
}

WinnerResult perfectionist_winners(const Election& election, std::size_t k,
                                   const WinnerOptions& options) {
  if (k == 0 || k > election.num_candidates()) {
    throw PreconditionError("need 1 <= k <= m");
  }
  std::map<Committee, std::size_t> tally;
  for (const Vote& vote : election.votes()) ++tally[top_k_prefix(vote, k)];
  std::size_t best = 0;
  for (const auto& [committee, count] : tally) best = std::max(best, count);
  std::vector<std::vector<Candidate>> ties;
  for (const auto& [committee, count] : tally) {
    if (count == best) {
      ties.emplace_back(committee.members().begin(), committee.members().end());
    }
  }
  WinnerResult result;
  result.algorithm = "perfectionist";
  result.best_score = Rational(best);
  const auto count = ties.size();
  fill_winners(result, std::move(ties), count, options.tie_cap);
  return result;
}

WinnerResult near_perfectionist_winners(const CountingFunction& g,
                                        const Election& election,
                                        std::size_t q,
                                        const WinnerOptions& options) {
  require_counting_fits(g, election);
  const std::size_t k = g.k();
  const std::size_t m = election.num_candidates();
  const Rational slope = g(1);

  auto bloc = [&] {
    std::vector<Rational> gamma(m, Rational(0));
    for (std::size_t i = 0; i < k; ++i) gamma[i] = slope;
    return separable_winners(SingleWinnerScoring(std::move(gamma)), election,
                             k, options);
  };
  if (k < 2 || singularity(g).infinite()) {
    WinnerResult result = bloc();
    result.algorithm = "near-perfectionist";
    return result;
  }
  const std::size_t sing = *singularity(g).value;
  if (k - sing > q) {
    throw PreconditionError("k - sing(g) = " + std::to_string(k - sing) +
                            " exceeds q = " + std::to_string(q));
  }
  const ScoringEvaluator evaluator = counting_evaluator(g, m);
  auto fallback = [&] {
    WinnerResult result = brute_force_winners(evaluator, election, options);
    result.algorithm = "near-perfectionist(brute-force)";
    return result;
  };
  if (2 * q >= k) return fallback();

  std::uint64_t per_voter = 0;
  for (std::size_t t = sing; t <= k; ++t) {
    per_voter += binomial(k, t) * binomial(m - k, k - t);
  }
  if (per_voter * election.num_voters() > options.enumeration_cap) {
    throw CapExceeded("near-perfectionist enumeration of " +
                      std::to_string(per_voter * election.num_voters()) +
                      " committees exceeds the enumeration cap");
  }

  const CountingScorer scorer(g, election);
  std::unordered_set<std::vector<Candidate>, CommitteeHash> seen;
  TieCollector case1(options.tie_cap);
  std::vector<Candidate> members;
  for (const Vote& vote : election.votes()) {
    const std::vector<Candidate> top(vote.begin(), vote.begin() + k);
    const std::vector<Candidate> rest(vote.begin() + k, vote.end());
    for (std::size_t t = sing; t <= k; ++t) {
      if (k - t > rest.size()) continue;
      auto inner = first_combination(t);
      do {
        auto outer = first_combination(k - t);
        do {
          members.clear();
          for (auto i : inner) members.push_back(top[i]);
          for (auto i : outer) members.push_back(rest[i]);
          std::sort(members.begin(), members.end());
          if (!seen.insert(members).second) continue;
          case1.offer(scorer.score(members), members);
        } while (next_combination(outer, rest.size()));
      } while (next_combination(inner, k));
    }
  }

  // Committees outside case 1 score exactly slope * Bloc score.
  const WinnerResult bloc_result = bloc();
  const std::int64_t bound =
      scaled_int64(bloc_result.best_score, scorer.denominator);
  std::vector<std::vector<Candidate>> case2;
  for (const auto& w : bloc_result.winners) {
    std::vector<Candidate> v(w.members().begin(), w.members().end());
    if (!seen.contains(v)) case2.push_back(std::move(v));
  }

  WinnerResult result;
  result.algorithm = "near-perfectionist";
  if (case1.best() > bound) {
    result.best_score = scorer.unscale(case1.best());
    fill_winners(result, case1.ties(), case1.count(), options.tie_cap);
    return result;
  }
  if (case2.empty() || bloc_result.truncated) return fallback();
  std::vector<std::vector<Candidate>> ties = case2;
  std::uint64_t count = case2.size();
  if (case1.best() == bound) {
    count += case1.count();
    for (const auto& t : case1.ties()) {
      if (ties.size() <= options.tie_cap) ties.push_back(t);
    }
  }
  result.best_score = scorer.unscale(bound);
  fill_winners(result, std::move(ties), count, options.tie_cap);
  return result;
}

WinnerResult greedy_concave(const CountingFunction& g,
                            const Election& election) {
  require_counting_fits(g, election);
  if (!is_concave(g)) {
    throw PreconditionError("greedy requires a concave counting function");
  }
  const CountingScorer scorer(g, election);
  const std::size_t m = scorer.m;
  std::vector<std::size_t> counts(scorer.n, 0);
  std::vector<char> chosen(m, 0);
  std::vector<Candidate> members;
  std::int64_t value = 0;
  for (std::size_t step = 0; step < scorer.k; ++step) {
    std::int64_t best_gain = -1;
    Candidate best = 0;
    for (Candidate c = 0; c < m; ++c) {
      if (chosen[c]) continue;
      std::int64_t gain = 0;
      for (std::size_t v = 0; v < scorer.n; ++v) {
        if (scorer.in_top[v * m + c]) {
          gain += scorer.table[counts[v] + 1] - scorer.table[counts[v]];
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    chosen[best] = 1;
    members.push_back(best);
    value += best_gain;
    for (std::size_t v = 0; v < scorer.n; ++v) {
      counts[v] += scorer.in_top[v * m + best];
    }
  }
  WinnerResult result;
  result.algorithm = "greedy";
  result.exact = false;
  result.ties_complete = false;
  result.best_score = scorer.unscale(value);
  result.winners.emplace_back(std::move(members));
  return result;
}

WinnerResult exact_counting_optimum(const CountingFunction& g,
                                    const Election& election,
                                    const WinnerOptions& options) {
  require_counting_fits(g, election);
  const CountingScorer scorer(g, election);
  const std::size_t k = scorer.k;
  const std::size_t m = scorer.m;
  const std::size_t n = scorer.n;

  std::vector<std::size_t> frequency(m, 0);
  std::vector<std::size_t> owner(m, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      const Candidate c = election.vote(v)[i];
      ++frequency[c];
      owner[c] = v;
    }
  }
  std::vector<Candidate> core;
  std::vector<Candidate> inert;
  std::vector<std::vector<Candidate>> private_of(n);
  for (Candidate c = 0; c < m; ++c) {
    if (frequency[c] >= 2) core.push_back(c);
    if (frequency[c] == 1) private_of[owner[c]].push_back(c);
    if (frequency[c] == 0) inert.push_back(c);
  }
  std::vector<std::size_t> core_index(m, SIZE_MAX);
  for (std::size_t i = 0; i < core.size(); ++i) core_index[core[i]] = i;

  // Voters with the same shared top-k members and the same number of private
  // ones are interchangeable; at most k of each type can take a private seat.
  struct VoterType {
    std::vector<std::size_t> core_members;
    std::size_t privates;
    std::vector<std::size_t> voters;
  };
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> by_key;
  std::vector<VoterType> types;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> shared;
    for (std::size_t i = 0; i < k; ++i) {
      const Candidate c = election.vote(v)[i];
      if (core_index[c] != SIZE_MAX) shared.push_back(core_index[c]);
    }
    std::sort(shared.begin(), shared.end());
    auto key = std::make_pair(shared, private_of[v].size());
    auto [it, inserted] = by_key.emplace(key, types.size());
    if (inserted) types.push_back({shared, private_of[v].size(), {}});
    types[it->second].voters.push_back(v);
  }

  std::uint64_t subsets = 0;
  for (std::size_t s = 0; s <= std::min(k, core.size()); ++s) {
    subsets += binomial(core.size(), s);
    if (subsets > options.enumeration_cap) {
      throw CapExceeded("exact counting search over " +
                        std::to_string(core.size()) +
                        " shared candidates exceeds the enumeration cap");
    }
  }

  constexpr std::int64_t kNone = INT64_MIN / 4;
  const auto& table = scorer.table;
  std::vector<char> in_subset(core.size(), 0);
  std::vector<std::size_t> base_count(types.size());

  // Best private-seat allocation; choice[item][s] records seats given.
  struct Item {
    std::size_t type;
    std::size_t copy;
  };
  auto allocate = [&](std::size_t seats, std::vector<Item>* items,
                      std::vector<std::vector<std::size_t>>* choice) {
    std::vector<std::int64_t> dp(seats + 1, kNone);
    dp[0] = 0;
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto& type = types[t];
      const std::size_t copies = std::min(type.voters.size(), seats);
      const std::size_t a = base_count[t];
      const std::size_t limit = std::min(type.privates, k - a);
      if (limit == 0) continue;
      for (std::size_t copy = 0; copy < copies; ++copy) {
        std::vector<std::int64_t> next(seats + 1, kNone);
        std::vector<std::size_t> took(seats + 1, 0);
        for (std::size_t s = 0; s <= seats; ++s) {
          if (dp[s] == kNone) continue;
          for (std::size_t y = 0; y <= limit && s + y <= seats; ++y) {
            const std::int64_t value = dp[s] + table[a + y] - table[a];
            if (value > next[s + y]) {
              next[s + y] = value;
              took[s + y] = y;
            }
          }
        }
        dp = std::move(next);
        if (items) {
          items->push_back({t, copy});
          choice->push_back(std::move(took));
        }
      }
    }
    return dp;
  };

  std::int64_t best = kNone;
  std::vector<std::size_t> best_subset;
  std::size_t best_private_seats = 0;
  for (std::size_t s = 0; s <= std::min(k, core.size()); ++s) {
    auto pick = first_combination(s);
    do {
      std::fill(in_subset.begin(), in_subset.end(), 0);
      for (auto i : pick) in_subset[i] = 1;
      std::int64_t base = 0;
      for (std::size_t t = 0; t < types.size(); ++t) {
        std::size_t a = 0;
        for (auto i : types[t].core_members) a += in_subset[i];
        base_count[t] = a;
        base += static_cast<std::int64_t>(types[t].voters.size()) * table[a];
      }
      const std::size_t seats = k - s;
      const auto dp = allocate(seats, nullptr, nullptr);
      for (std::size_t used = 0; used <= seats; ++used) {
        if (dp[used] == kNone || seats - used > inert.size()) continue;
        if (base + dp[used] > best) {
          best = base + dp[used];
          best_subset.assign(pick.begin(), pick.end());
          best_private_seats = used;
        }
      }
    } while (next_combination(pick, core.size()));
  }
  if (best == kNone) throw PreconditionError("no committee of size k exists");

  // Rebuild the allocation for the best shared subset.
  std::fill(in_subset.begin(), in_subset.end(), 0);
  for (auto i : best_subset) in_subset[i] = 1;
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::size_t a = 0;
    for (auto i : types[t].core_members) a += in_subset[i];
    base_count[t] = a;
  }
  const std::size_t seats = k - best_subset.size();
  std::vector<Item> items;
  std::vector<std::vector<std::size_t>> choice;
  allocate(seats, &items, &choice);
  std::vector<Candidate> members;
  for (auto i : best_subset) members.push_back(core[i]);
  std::size_t remaining = best_private_seats;
  for (std::size_t idx = items.size(); idx-- > 0;) {
    const std::size_t y = choice[idx][remaining];
    const auto& privates = private_of[types[items[idx].type].voters[items[idx].copy]];
    members.insert(members.end(), privates.begin(), privates.begin() + y);
    remaining -= y;
  }
  for (std::size_t i = 0; i < seats - best_private_seats; ++i) {
    members.push_back(inert[i]);
  }
  std::sort(members.begin(), members.end());

  WinnerResult result;
  result.algorithm = "exact-counting";
  result.ties_complete = false;
  result.best_score = scorer.unscale(best);
  result.winners.emplace_back(std::move(members));
  return result;
}

bool exists_committee_with_score(const ScoringEvaluator& evaluator,
                                 const Election& election,
                                 const Rational& threshold,
                                 const WinnerOptions& options) {
  if (threshold <= 0) return true;
  if (binomial(election.num_candidates(), evaluator.k()) <=
      options.enumeration_cap) {
    return brute_force_winners(evaluator, election, options).best_score >=
           threshold;
  }
  if (const auto g = evaluator.counting_function()) {
    if (election.num_candidates() != evaluator.m()) {
      throw PreconditionError("election and evaluator disagree on m");
    }
    return exact_counting_optimum(*g, election, options).best_score >=
           threshold;
  }
  throw CapExceeded("C(m,k) exceeds the enumeration cap and the rule is not "
                    "top-k-counting");
}

Rational counting_score(const CountingFunction& g, const Election& election,
                        const Committee& committee) {
  require_counting_fits(g, election);
  if (committee.size() != g.k()) {
    throw PreconditionError("committee size differs from k");
  }
  election.check_committee(committee);
  Rational total = 0;
  for (const Vote& vote : election.votes()) {
    total += g(top_k_count(vote, committee, g.k()));
  }
  return total;
}

}  // namespace committee
