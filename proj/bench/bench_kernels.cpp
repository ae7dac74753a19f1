// Copyright 2026 The Altruist Authors
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

// Serial vs OpenMP timings for the oracle and the singleton DP.
// Argument 0 runs the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include "altruist/oracle.hpp"
#include "altruist/singleton_dp.hpp"
#include "support/random_games.hpp"

namespace altruist {
namespace {

// Egoists on 4 resources with agent-specific strategy sets.
Game oracle_instance(int agents) {
  testing::Rng rng(17);
  std::vector<Resource> res;
  for (int r = 0; r < 4; ++r) {
    res.push_back({testing::rid(static_cast<std::size_t>(r)),
                   DelayFunction::table(testing::sorted_table(rng, agents, 1, 30))});
  }
  std::vector<AgentSpec> specs;
  for (int i = 0; i < agents; ++i) {
    AgentSpec a{testing::aid(static_cast<std::size_t>(i)), Rational(0), {}};
    for (int r = 0; r < 4; ++r) {
      if (r != i % 4) a.strategies.push_back({testing::rid(static_cast<std::size_t>(r))});
    }
    a.strategies.push_back({testing::rid(static_cast<std::size_t>(i % 4))});
    specs.push_back(std::move(a));
  }
  return Game(std::move(res), std::move(specs));
}

Game dp_instance(int agents) {
  testing::Rng rng(23);
  std::vector<std::vector<Rational>> tables;
  for (int r = 0; r < 4; ++r) tables.push_back(testing::sorted_table(rng, agents, 1, 40));
  const std::vector<Rational> levels{Rational(0), Rational(1, 2), Rational(1)};
  std::vector<Rational> betas;
  for (int i = 0; i < agents; ++i) betas.push_back(levels[static_cast<std::size_t>(i) % 3]);
  return testing::symmetric_singleton(tables, betas);
}

void BM_Oracle(benchmark::State& state) {
  const Game g = oracle_instance(9);
  OracleOptions o;
  o.parallel = state.range(0) == 1;
  o.canonical_symmetric = false;
  o.budget = 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nash(g, o));
  state.SetLabel(o.parallel ? "openmp" : "serial");
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SingletonDp(benchmark::State& state) {
  const Game g = dp_instance(8);
  SolveOptions o;
  o.parallel = state.range(0) == 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric_singleton(g, o));
  state.SetLabel(o.parallel ? "openmp" : "serial");
}
BENCHMARK(BM_SingletonDp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace altruist

BENCHMARK_MAIN();
