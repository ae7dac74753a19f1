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

#include "altruist/oracle.hpp"

#include <algorithm>
#include <set>

#include "altruist/errors.hpp"
#include "altruist/generators.hpp"
#include "doctest.h"
#include "support/random_games.hpp"

namespace altruist {
namespace {

using testing::R;

// Reference enumeration: every state of the product, equilibrium checked by
// re-evaluating the mover's cost after each unilateral switch.
struct Naive {
  std::vector<State> equilibria;
  std::optional<Rational> best;
  std::optional<Rational> worst;
  Rational optimum;
};

Naive naive(const Game& g) {
  Naive out;
  State s{std::vector<std::size_t>(g.num_agents(), 0)};
  bool first = true;
  while (true) {
    const Rational c = social_cost(g, s);
    if (first || c < out.optimum) out.optimum = c;
    first = false;
    bool stable = true;
    for (std::size_t i = 0; i < g.num_agents() && stable; ++i) {
      const Rational now = individual_cost(g, s, i);
      for (std::size_t k = 0; k < g.agent(i).strategies.size(); ++k) {
        State t = s;
        t.choice[i] = k;
        if (individual_cost(g, t, i) < now) {
          stable = false;
          break;
        }
      }
    }
    if (stable) {
      out.equilibria.push_back(s);
      if (!out.best || c < *out.best) out.best = c;
      if (!out.worst || c > *out.worst) out.worst = c;
    }
    std::size_t i = 0;
    while (i < g.num_agents() &&
           ++s.choice[i] == g.agent(i).strategies.size()) {
      s.choice[i++] = 0;
    }
    if (i == g.num_agents()) break;
  }
  std::sort(out.equilibria.begin(), out.equilibria.end(),
            [](const State& a, const State& b) { return a.choice < b.choice; });
  return out;
}

// Per-level congestion profile; the canonical key of a symmetric state.
std::vector<std::vector<int>> profile(const Game& g, const State& s) {
  std::vector<std::vector<int>> p(g.levels().size(),
                                  std::vector<int>(g.num_resources(), 0));
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    for (std::size_t r : g.agent(i).strategies[s.choice[i]]) {
      ++p[g.level_of(i)][r];
    }
  }
  return p;
}

TEST_CASE("example 1") {
  const Game g = example1();
  const auto e = enumerate_nash(g);
  CHECK(e.equilibria.empty());
  CHECK_FALSE(e.best.has_value());
  CHECK(e.state_count == 16);
  CHECK(brute_force_optimum(g).cost == Rational(31));
  CHECK_FALSE(has_nash(g));
}

TEST_CASE("footnote games") {
  SUBCASE("symmetric") {
    const Game g = footnote_symmetric();
    const auto e = enumerate_nash(g);
    REQUIRE(e.best.has_value());
    CHECK(e.best->cost == Rational(106));
    CHECK(e.worst->cost == Rational(108));
    bool all_on_first = false;
    for (const auto& s : e.equilibria) {
      const auto loads = congestions(g, s).load;
      if (loads == std::vector<int>{3, 0}) all_on_first = true;
      if (loads == std::vector<int>{1, 2}) CHECK(social_cost(g, s) == Rational(106));
    }
    CHECK(all_on_first);
    CHECK(brute_force_optimum(g).cost == Rational(106));
  }
  SUBCASE("asymmetric") {
    const Game g = footnote_asymmetric();
    const auto opt = brute_force_optimum(g);
    CHECK(opt.cost == Rational(20));
    CHECK(congestions(g, opt.state).load == std::vector<int>{1, 1, 1});
    // Agents on r2, r3, r3: 1 * 8 + 2 * 8.
    const State s{{1, 1, 1}};
    CHECK(social_cost(g, s) == Rational(24));
    CHECK(is_nash(g, s).is_nash);
    const auto e = enumerate_nash(g);
    CHECK(std::find(e.equilibria.begin(), e.equilibria.end(), s) !=
          e.equilibria.end());
  }
}

TEST_CASE("single agent") {
  const Game g = testing::symmetric_singleton({R({5}), R({3})}, {Rational(0)});
  const auto e = enumerate_nash(g);
  REQUIRE(e.equilibria.size() == 1);
  CHECK(e.equilibria[0].choice == std::vector<std::size_t>{1});
  CHECK(brute_force_optimum(g).cost == Rational(3));
}

TEST_CASE("agreement with the reference enumeration") {
  testing::Rng rng(31);
  const std::vector<Rational> pool{Rational(0), Rational(1, 3), Rational(1)};
  for (int round = 0; round < 200; ++round) {
    const Game g = round % 2 == 0 ? testing::random_singleton(rng, 5, 4)
                                  : testing::random_linear(rng, 4, 4, pool);
    const Naive ref = naive(g);
    OracleOptions raw;
    raw.canonical_symmetric = false;
    const auto e = enumerate_nash(g, raw);
    CHECK(e.equilibria == ref.equilibria);
    CHECK(e.best.has_value() == ref.best.has_value());
    if (e.best) {
      CHECK(e.best->cost == *ref.best);
      CHECK(e.worst->cost == *ref.worst);
    }
    CHECK(brute_force_optimum(g, raw).cost == ref.optimum);
    CHECK(e.state_count == e.visited);
  }
}

TEST_CASE("canonical enumeration of symmetric games") {
  testing::Rng rng(37);
  const std::vector<Rational> pool{Rational(0), Rational(1, 2), Rational(1)};
  for (int round = 0; round < 150; ++round) {
    const Game g = testing::random_symmetric_singleton(rng, 6, 3, pool);
    OracleOptions raw;
    raw.canonical_symmetric = false;
    const auto a = enumerate_nash(g);
    const auto b = enumerate_nash(g, raw);
    CHECK(a.best.has_value() == b.best.has_value());
    if (a.best) {
      CHECK(a.best->cost == b.best->cost);
      CHECK(a.worst->cost == b.worst->cost);
    }
    std::set<std::vector<std::vector<int>>> pa, pb;
    for (const auto& s : a.equilibria) pa.insert(profile(g, s));
    for (const auto& s : b.equilibria) pb.insert(profile(g, s));
    CHECK(pa == pb);
    CHECK(a.equilibria.size() == pa.size());
    CHECK(a.visited <= b.visited);
    CHECK(a.visited == oracle_work(g));
    CHECK(brute_force_optimum(g).cost == brute_force_optimum(g, raw).cost);
  }
}

TEST_CASE("serial and parallel runs agree") {
  testing::Rng rng(41);
  for (int round = 0; round < 40; ++round) {
    const Game g = testing::random_singleton(rng, 7, 4);
    OracleOptions serial;
    serial.parallel = false;
    const auto a = enumerate_nash(g, serial);
    const auto b = enumerate_nash(g);
    CHECK(a.equilibria == b.equilibria);
    if (a.best) {
      CHECK(a.best->state == b.best->state);
      CHECK(a.worst->state == b.worst->state);
    }
    CHECK(brute_force_optimum(g, serial).state == brute_force_optimum(g).state);
    CHECK(local_optima(g, serial) == local_optima(g));
  }
}

TEST_CASE("budget refusal") {
  const Game g = example1();
  OracleOptions tight;
  tight.budget = 15;
  tight.canonical_symmetric = false;
  CHECK_THROWS_AS(enumerate_nash(g, tight), BudgetExceededError);
  CHECK_THROWS_AS(brute_force_optimum(g, tight), BudgetExceededError);
  tight.budget = 16;
  CHECK_NOTHROW(enumerate_nash(g, tight));
  // Symmetric canonicalization visits fewer states for the same budget.
  tight.budget = 15;
  tight.canonical_symmetric = true;
  CHECK(oracle_work(g, tight) < 16);
  CHECK_NOTHROW(enumerate_nash(g, tight));

  std::vector<Resource> res;
  for (int r = 0; r < 10; ++r) {
    res.push_back({testing::rid(static_cast<std::size_t>(r)),
                   DelayFunction::linear(Rational(r + 1))});
  }
  std::vector<AgentSpec> agents;
  for (int i = 0; i < 10; ++i) {
    AgentSpec a{testing::aid(static_cast<std::size_t>(i)), Rational(0), {}};
    // Agent-specific strategy lists make the game asymmetric.
    for (int r = 0; r < 10; ++r) {
      if (r != i) a.strategies.push_back({testing::rid(static_cast<std::size_t>(r))});
    }
    agents.push_back(a);
  }
  const Game big(res, agents);
  CHECK(state_space_size(big) == 3486784401ULL);
  CHECK_THROWS_AS(enumerate_nash(big), BudgetExceededError);
}

TEST_CASE("all-altruist equilibria are the local optima") {
  testing::Rng rng(43);
  for (int round = 0; round < 150; ++round) {
    const Game base = testing::random_singleton(rng, 5, 4);
    const Game alt =
        base.with_betas(std::vector<Rational>(base.num_agents(), Rational(1)));
    OracleOptions raw;
    raw.canonical_symmetric = false;
    CHECK(enumerate_nash(alt, raw).equilibria == local_optima(alt, raw));
    CHECK(local_optima(base, raw) == local_optima(alt, raw));
  }
}

TEST_CASE("minimum altruist subsets") {
  const Game g = testing::symmetric_singleton(
      {R({1, 2, 3}), {Rational(5, 2), Rational(5, 2), Rational(5, 2)}},
      {Rational(0), Rational(0), Rational(0)});
  const auto two = min_altruist_subset_bruteforce(g, CongestionVector{{1, 2}});
  REQUIRE(two.has_value());
  CHECK(*two == std::vector<std::size_t>{0, 1});

  // (2, 1) is an all-egoist equilibrium: 2 <= 5/2 and 5/2 <= 3.
  const auto none = min_altruist_subset_bruteforce(g, CongestionVector{{2, 1}});
  REQUIRE(none.has_value());
  CHECK(none->empty());

  const Game fa = footnote_asymmetric();
  CHECK_FALSE(min_altruist_subset_bruteforce(fa, CongestionVector{{2, 1, 0}})
                  .has_value());
  CHECK(nash_with_congestions_exists(g, CongestionVector{{2, 1}}));
  CHECK_FALSE(nash_with_congestions_exists(g, CongestionVector{{1, 2}}));
}

}  // namespace
}  // namespace altruist
