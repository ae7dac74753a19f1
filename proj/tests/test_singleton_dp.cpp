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

#include "altruist/singleton_dp.hpp"

#include "altruist/errors.hpp"
#include "altruist/generators.hpp"
#include "altruist/oracle.hpp"
#include "doctest.h"
#include "support/random_games.hpp"

namespace altruist {
namespace {

using testing::symmetric_singleton;

using testing::R;
Game three_agent_game(int altruists) {
  std::vector<Rational> betas(3, Rational(0));
  for (int i = 0; i < altruists; ++i) betas[i] = Rational(1);
  return symmetric_singleton(
      {R({1, 2, 3}), {Rational(5, 2), Rational(5, 2), Rational(5, 2)}}, betas);
}

TEST_CASE("perceived delays") {
  const auto d = DelayFunction::table(R({4, 8, 9, 11}));
  auto p = perceived_delays(d, Rational(1), 2);
  CHECK(p.occupy == Rational(12));
  CHECK(p.enter == Rational(11));
  p = perceived_delays(d, Rational(0), 2);
  CHECK(p.occupy == Rational(8));
  CHECK(p.enter == Rational(9));
  CHECK_THROWS_AS(perceived_delays(d, Rational(0), 4), ValidationError);
}

TEST_CASE("resource combos follow the gates") {
  const Game g = example1();
  SingletonSolver solver(g);
  // Level 0 is beta 0 (3 egoists), level 1 is beta 1 (the altruist).
  LevelBounds b(2);
  b[0].d_max = Rational(8);
  b[0].d_min_plus = Rational(9);
  b[1].d_max = Rational(11);
  b[1].d_min_plus = Rational(11);
  CHECK(admissible(b));
  const auto combos = solver.resource_combos(0, b, {3, 1});
  CHECK(std::find(combos.begin(), combos.end(), std::vector<int>{2, 0}) !=
        combos.end());
  // d'(4) = 44 - 27 = 17 > 11 and d'(2) = 12 > 11 keep the altruist away.
  CHECK(std::find(combos.begin(), combos.end(), std::vector<int>{1, 1}) ==
        combos.end());

  LevelBounds bad(2);
  bad[0].d_max = Rational(9);
  bad[0].d_min_plus = Rational(8);
  CHECK_FALSE(admissible(bad));
}

TEST_CASE("resource combos on a single resource") {
  const Game g = symmetric_singleton({R({5})}, {Rational(0)});
  SingletonSolver solver(g);
  LevelBounds open(1);
  open[0].d_max = Rational(5);
  // Entering an empty resource costs 5, which fails an enter gate of +inf.
  CHECK(solver.resource_combos(0, open, {1}) ==
        std::vector<std::vector<int>>{{1}});
  open[0].d_min_plus = Rational(5);
  CHECK(solver.resource_combos(0, open, {1}) ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("example 1 has no equilibrium") {
  const auto report = solve_symmetric_singleton(example1());
  CHECK_FALSE(report.exists);
  CHECK_FALSE(report.best.has_value());
  CHECK_FALSE(report.worst.has_value());
}

TEST_CASE("footnote game: best 106, worst 108") {
  const auto report = solve_symmetric_singleton(footnote_symmetric());
  REQUIRE(report.exists);
  CHECK(report.best->cost == Rational(106));
  CHECK(report.worst->cost == Rational(108));
  CHECK(is_nash(footnote_symmetric(), report.best->state).is_nash);
  CHECK(is_nash(footnote_symmetric(), report.worst->state).is_nash);
  CHECK(report.worst->counts[0] == std::vector<int>{3});
  REQUIRE(report.witness_bounds.has_value());
}

TEST_CASE("single egoist takes the cheaper resource") {
  const Game g = symmetric_singleton({R({5}), R({3})}, {Rational(0)});
  const auto report = solve_symmetric_singleton(g);
  REQUIRE(report.exists);
  CHECK(report.best->cost == Rational(3));
  CHECK(report.worst->cost == Rational(3));
}

TEST_CASE("equilibrium whose busiest resource attracts its own altruist") {
  // Found while checking the max/min gates: with x = e at congestion 2 the
  // altruist's d'(3) = 11 < d'(2) = 12, so no single gate pair certifies
  // the state (e: one egoist and the altruist, f: one egoist).
  const Game g = symmetric_singleton({R({4, 8, 9}), R({9, 20, 20})},
                                     {Rational(0), Rational(0), Rational(1)});
  const auto dp = solve_symmetric_singleton(g);
  const auto oracle = enumerate_nash(g);
  REQUIRE(oracle.best.has_value());
  REQUIRE(dp.exists);
  CHECK(dp.best->cost == oracle.best->cost);
  CHECK(dp.worst->cost == oracle.worst->cost);
}

TEST_CASE("social optimum") {
  CHECK(social_optimum_symmetric(footnote_symmetric()).cost == Rational(106));
  CHECK(social_optimum_symmetric(example1()).cost == Rational(31));
  const Game one = symmetric_singleton({R({5}), R({3}), R({7})}, {Rational(0)});
  const auto opt = social_optimum_symmetric(one);
  CHECK(opt.cost == Rational(3));
  CHECK(opt.counts == std::vector<int>{0, 1, 0});
}

TEST_CASE("thresholds") {
  SUBCASE("two altruists make the optimum stable") {
    const auto t = thresholds(three_agent_game(0));
    CHECK(t.optimum == Rational(6));
    REQUIRE(t.n1_plus.has_value());
    CHECK(*t.n1_plus == 2);
    // Cross-check every altruist count with the oracle.
    for (int k = 0; k <= 3; ++k) {
      const auto e = enumerate_nash(three_agent_game(k));
      const auto& row = t.by_count[static_cast<std::size_t>(k)];
      REQUIRE(row.has_value() == e.best.has_value());
      if (row) {
        CHECK(row->first == e.best->cost);
        CHECK(row->second == e.worst->cost);
      }
    }
  }
  SUBCASE("footnote game has no anarchy threshold") {
    const auto t = thresholds(footnote_symmetric());
    CHECK_FALSE(t.n1_minus.has_value());
  }
  SUBCASE("identical linear resources are optimal from the start") {
    const Game g = symmetric_singleton({R({1, 2}), R({1, 2})},
                                       {Rational(0), Rational(0)});
    const auto t = thresholds(g);
    REQUIRE(t.n1_plus.has_value());
    REQUIRE(t.n1_minus.has_value());
    CHECK(*t.n1_plus == 0);
    CHECK(*t.n1_minus == 0);
  }
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(SingletonSolver{footnote_asymmetric()}, UnsupportedGameError);
  const Game many = symmetric_singleton(
      {R({1, 2, 3, 4, 5}), R({1, 2, 3, 4, 5})},
      {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)});
  CHECK_THROWS_AS(SingletonSolver{many}, UnsupportedGameError);
  SolveOptions wide;
  wide.max_levels = 5;
  CHECK_NOTHROW(SingletonSolver{many, wide});
}

TEST_CASE("agrees with the oracle on random games") {
  testing::Rng rng(20261018);
  const std::vector<Rational> pool{Rational(0), Rational(1, 2), Rational(1)};
  for (int round = 0; round < 300; ++round) {
    const Game g = testing::random_symmetric_singleton(rng, 6, 4, pool);
    CAPTURE(round);
    const auto dp = solve_symmetric_singleton(g);
    const auto oracle = enumerate_nash(g);
    REQUIRE(dp.exists == oracle.best.has_value());
    if (!dp.exists) continue;
    CHECK(dp.best->cost == oracle.best->cost);
    CHECK(dp.worst->cost == oracle.worst->cost);
    CHECK(is_nash(g, dp.best->state).is_nash);
    CHECK(is_nash(g, dp.worst->state).is_nash);
    CHECK(social_cost(g, dp.best->state) == dp.best->cost);
    CHECK(social_optimum_symmetric(g).cost <= dp.best->cost);
  }
}

TEST_CASE("serial and parallel runs agree") {
  testing::Rng rng(7);
  const std::vector<Rational> pool{Rational(0), Rational(1, 2), Rational(1)};
  SolveOptions serial;
  serial.parallel = false;
  for (int round = 0; round < 40; ++round) {
    const Game g = testing::random_symmetric_singleton(rng, 6, 4, pool);
    const auto a = solve_symmetric_singleton(g);
    const auto b = solve_symmetric_singleton(g, serial);
    REQUIRE(a.exists == b.exists);
    if (!a.exists) continue;
    CHECK(a.best->counts == b.best->counts);
    CHECK(a.worst->counts == b.worst->counts);
  }
}

}  // namespace
}  // namespace altruist
