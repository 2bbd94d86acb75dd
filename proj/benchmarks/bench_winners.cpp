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
#include <benchmark/benchmark.h>

#include "committee/fpt.hpp"
#include "committee/generators.hpp"
#include "committee/winners.hpp"

namespace committee {
namespace {

constexpr std::uint64_t kSeed = 2026;

void BM_BruteForce(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(m, 12, kSeed);
  const auto eval = counting_evaluator(CountingFunction::harmonic(3), m);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_winners(eval, e));
}
BENCHMARK(BM_BruteForce)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(m, 12, kSeed);
  const auto g = CountingFunction::harmonic(3);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_concave(g, e));
}
BENCHMARK(BM_Greedy)->DenseRange(10, 20, 2)->Arg(100)->Arg(1000);

void BM_Separable(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(m, 100, kSeed);
  const auto borda = SingleWinnerScoring::borda(m);
  for (auto _ : state) benchmark::DoNotOptimize(separable_winners(borda, e, 5));
}
BENCHMARK(BM_Separable)->RangeMultiplier(4)->Range(16, 1024);

void BM_FptVoters(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(12, n, kSeed);
  const auto g = CountingFunction::harmonic(3);
  for (auto _ : state) benchmark::DoNotOptimize(fpt_voters_winners(g, e));
}
BENCHMARK(BM_FptVoters)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_NearPerfectionist(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(m, 10, kSeed);
  const auto g = CountingFunction::parse("0,1,2,4,6");
  for (auto _ : state) benchmark::DoNotOptimize(near_perfectionist_winners(g, e, 1));
}
BENCHMARK(BM_NearPerfectionist)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ExactCounting(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Election e = gen_impartial_culture(m, 4, kSeed);
  const auto g = CountingFunction::harmonic(4);
  for (auto _ : state) benchmark::DoNotOptimize(exact_counting_optimum(g, e));
}
BENCHMARK(BM_ExactCounting)->Arg(20)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace committee

BENCHMARK_MAIN();
