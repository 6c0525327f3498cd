// Copyright 2026 The softsched Authors.
//
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

#include <random>

#include "softsched/components.hpp"
#include "softsched/conflict.hpp"
#include "softsched/game.hpp"
#include "softsched/harness.hpp"

using namespace softsched;

namespace {

ConflictGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  ConflictGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge(rng)) g.add_conflict(a, b);
    }
  }
  return g;
}

RateVector random_rates(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(1, 9);
  RateVector r(n);
  for (auto& v : r) v = d(rng);
  return r;
}

void BM_EnumerateMaximal(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal(g));
}
BENCHMARK(BM_EnumerateMaximal)->Arg(10)->Arg(20)->Arg(40);

void BM_FictitiousPlay(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 0.4, 2);
  const auto h = build_payoff(enumerate_maximal(g), random_rates(n, 3));
  state.counters["components"] = static_cast<double>(h.cols());
  for (auto _ : state) benchmark::DoNotOptimize(fp_solve(h));
}
BENCHMARK(BM_FictitiousPlay)->Arg(10)->Arg(20)->Arg(30);

void BM_ExactOracle(benchmark::State& state) {
  const auto g = random_graph(8, 0.6, 4);
  const auto h = build_payoff(enumerate_maximal(g), random_rates(8, 5));
  state.counters["components"] = static_cast<double>(h.cols());
  for (auto _ : state) benchmark::DoNotOptimize(lp_oracle(h));
}
BENCHMARK(BM_ExactOracle);

void BM_RunInstance(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n_sessions = static_cast<int>(state.range(0));
  int run = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_instance(cfg, run++));
}
BENCHMARK(BM_RunInstance)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
