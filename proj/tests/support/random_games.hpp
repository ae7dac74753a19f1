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

// Random instances shared by the tests, the acceptance suite and the
// benchmarks.

#ifndef ALTRUIST_TESTS_RANDOM_GAMES_HPP_
#define ALTRUIST_TESTS_RANDOM_GAMES_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "altruist/game.hpp"

namespace altruist::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

inline std::vector<Rational> sorted_table(Rng& rng, int length, int lo,
                                          int hi) {
  std::vector<Rational> values;
  for (int k = 0; k < length; ++k) values.emplace_back(uniform(rng, lo, hi));
  std::sort(values.begin(), values.end());
  return values;
}

// Non-decreasing table with non-decreasing increments.
inline std::vector<Rational> convex_table(Rng& rng, int length) {
  std::vector<Rational> values;
  int v = uniform(rng, 0, 6);
  int step = uniform(rng, 0, 3);
  for (int k = 0; k < length; ++k) {
    values.emplace_back(v);
    step += uniform(rng, 0, 3);
    v += step;
  }
  return values;
}

// Positive, non-decreasing table with non-increasing increments.
inline std::vector<Rational> concave_table(Rng& rng, int length) {
  std::vector<int> steps;
  for (int k = 0; k < length; ++k) steps.push_back(uniform(rng, 0, 8));
  std::sort(steps.rbegin(), steps.rend());
  steps[0] = std::max(steps[0], 1);
  std::vector<Rational> values;
  int v = 0;
  for (int s : steps) values.emplace_back(v += s);
  return values;
}

inline std::vector<Rational> R(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline std::string rid(std::size_t r) { return "r" + std::to_string(r + 1); }
inline std::string aid(std::size_t i) { return "a" + std::to_string(i + 1); }

// Symmetric singleton game over the given tables, one agent per beta.
inline Game symmetric_singleton(const std::vector<std::vector<Rational>>& tables,
                                const std::vector<Rational>& betas) {
  std::vector<Resource> resources;
  std::vector<std::vector<std::string>> strategies;
  for (std::size_t r = 0; r < tables.size(); ++r) {
    resources.push_back({rid(r), DelayFunction::table(tables[r])});
    strategies.push_back({rid(r)});
  }
  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    agents.push_back({aid(i), betas[i], strategies});
  }
  return Game(std::move(resources), std::move(agents));
}

// n <= max_n agents, m <= max_m resources, table entries in 1..12, levels
// drawn from a random non-empty subset of `level_pool`.
inline Game random_symmetric_singleton(Rng& rng, int max_n, int max_m,
                                       const std::vector<Rational>& level_pool) {
  const int n = uniform(rng, 1, max_n);
  const int m = uniform(rng, 1, max_m);
  std::vector<std::vector<Rational>> tables;
  for (int r = 0; r < m; ++r) tables.push_back(sorted_table(rng, n, 1, 12));
  std::vector<Rational> levels;
  for (const auto& b : level_pool) {
    if (uniform(rng, 0, 1) == 1) levels.push_back(b);
  }
  if (levels.empty()) levels.push_back(pick(rng, level_pool));
  std::vector<Rational> betas;
  for (int i = 0; i < n; ++i) betas.push_back(pick(rng, levels));
  return symmetric_singleton(tables, betas);
}

// Random singleton game (possibly asymmetric) with pure egoists.
inline Game random_singleton(Rng& rng, int max_n, int max_m) {
  const int n = uniform(rng, 1, max_n);
  const int m = uniform(rng, 1, max_m);
  std::vector<Resource> resources;
  for (int r = 0; r < m; ++r) {
    resources.push_back({rid(static_cast<std::size_t>(r)),
                         DelayFunction::table(sorted_table(rng, n, 1, 12))});
  }
  std::vector<AgentSpec> agents;
  for (int i = 0; i < n; ++i) {
    AgentSpec a{aid(static_cast<std::size_t>(i)), Rational(0), {}};
    for (int r = 0; r < m; ++r) {
      if (uniform(rng, 0, 2) != 0) a.strategies.push_back({rid(static_cast<std::size_t>(r))});
    }
    if (a.strategies.empty()) {
      a.strategies.push_back({rid(static_cast<std::size_t>(uniform(rng, 0, m - 1)))});
    }
    agents.push_back(std::move(a));
  }
  return Game(std::move(resources), std::move(agents));
}

// All-linear game with arbitrary (multi-resource) strategies.
inline Game random_linear(Rng& rng, int max_n, int max_m,
                          const std::vector<Rational>& beta_pool) {
  const int n = uniform(rng, 1, max_n);
  const int m = uniform(rng, 1, max_m);
  std::vector<Resource> resources;
  for (int r = 0; r < m; ++r) {
    resources.push_back({rid(static_cast<std::size_t>(r)),
                         DelayFunction::linear(Rational(uniform(rng, 1, 9)))});
  }
  std::vector<AgentSpec> agents;
  for (int i = 0; i < n; ++i) {
    AgentSpec a{aid(static_cast<std::size_t>(i)), pick(rng, beta_pool), {}};
    const int count = uniform(rng, 1, 4);
    for (int k = 0; k < count; ++k) {
      std::vector<std::string> s;
      for (int r = 0; r < m; ++r) {
        if (uniform(rng, 0, 1) == 1) s.push_back(rid(static_cast<std::size_t>(r)));
      }
      if (s.empty()) s.push_back(rid(static_cast<std::size_t>(uniform(rng, 0, m - 1))));
      a.strategies.push_back(std::move(s));
    }
    agents.push_back(std::move(a));
  }
  return Game(std::move(resources), std::move(agents));
}

inline State random_state(Rng& rng, const Game& game) {
  State s;
  for (const auto& a : game.agents()) {
    s.choice.push_back(static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(a.strategies.size()) - 1)));
  }
  return s;
}

}  // namespace altruist::testing

#endif  // ALTRUIST_TESTS_RANDOM_GAMES_HPP_
