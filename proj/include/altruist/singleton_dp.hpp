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

// Equilibria of symmetric singleton games by dynamic programming over
// resources.
//
// In a singleton game an agent of level l on resource e (congestion t_e)
// is stable iff its perceived delay there, occupy_l(e) = p_l(e, t_e), is at
// most enter_l(f) = p_l(f, t_f + 1) for every other resource f, where
// p_l = (1 - beta_l) d + beta_l d'. The condition separates across resources
// once a per-level gate is fixed:
//
//   regular gate T    every resource hosting level l has occupy_l <= T and
//                     every resource has enter_l >= T;
//   pivot (x, t)      for a perceived delay that drops, p_l(x, t + 1) <
//                     p_l(x, t): resource x holds exactly t agents, some of
//                     level l; every other resource has enter_l >= p_l(x, t)
//                     and, if it hosts level l, occupy_l <= p_l(x, t + 1).
//
// The pivot covers equilibria whose most loaded resource (for level l) would
// itself look attractive to enter again, which a single max/min pair cannot
// express. Enter checks are skipped on a resource holding all n agents.
//
// For every combination of per-level gates the resources are processed one
// at a time, tracking which tuples of remaining per-level agent counts are
// still assignable together with the cheapest and dearest social cost so
// far. Gate combinations that admit the same per-resource tuples are merged
// before any DP runs.

#ifndef ALTRUIST_SINGLETON_DP_HPP_
#define ALTRUIST_SINGLETON_DP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "altruist/game.hpp"

namespace altruist {

struct PerceivedDelays {
  Rational occupy;  // (1 - beta) d(n) + beta d'(n)
  Rational enter;   // (1 - beta) d(n + 1) + beta d'(n + 1)
};

PerceivedDelays perceived_delays(const DelayFunction& d, const Rational& beta,
                                 int n);

struct Pivot {
  std::size_t resource = 0;  // index into the game's resources
  int congestion = 0;
};

// Gates for one altruism level; nullopt encodes the -inf / +inf sentinels.
struct LevelBound {
  std::optional<Rational> d_max;       // occupy gate; nullopt = -inf
  std::optional<Rational> d_min_plus;  // enter gate; nullopt = +inf
  std::optional<Pivot> pivot;
};
using LevelBounds = std::vector<LevelBound>;

// Every regular level needs d_max <= d_min_plus.
bool admissible(const LevelBounds& bounds);

struct SolveOptions {
  std::size_t max_levels = 4;
  bool parallel = true;
};

struct Equilibrium {
  // counts[r][l]: agents of level l on resource r, over all game resources.
  std::vector<std::vector<int>> counts;
  Rational cost;
  State state;  // one concrete assignment realizing the counts
};

struct SolveReport {
  bool exists = false;
  std::vector<Rational> levels;
  std::optional<Equilibrium> best;
  std::optional<Equilibrium> worst;
  std::optional<LevelBounds> witness_bounds;  // gates that produced `best`
  std::size_t gate_combinations = 0;          // before merging
  std::size_t dp_runs = 0;                    // after merging
};

// Precomputed view of a symmetric singleton game.
class SingletonSolver {
 public:
  // Throws UnsupportedGameError for asymmetric or non-singleton games, or
  // when the game has more than options.max_levels altruism levels.
  explicit SingletonSolver(const Game& game, SolveOptions options = {});

  const Game& game() const { return game_; }
  // Resources in the common strategy set, ascending.
  const std::vector<std::size_t>& usable() const { return usable_; }
  const std::vector<int>& level_counts() const { return level_counts_; }

  // All per-level count tuples (k_1..k_L) that resource r may host under
  // the bounds, with k <= caps and sum(k) <= n, in lexicographic order.
  std::vector<std::vector<int>> resource_combos(
      std::size_t r, const LevelBounds& bounds,
      const std::vector<int>& caps) const;

  SolveReport solve() const;

  // Builds a state realizing per-resource, per-level counts.
  State state_from_counts(const std::vector<std::vector<int>>& counts) const;

 private:
  struct Candidate;
  struct DpResult;

  std::vector<std::vector<Candidate>> level_candidates() const;
  DpResult run_dp(const std::vector<unsigned char>& signature) const;
  LevelBound to_bound(std::size_t level, const Candidate& c) const;

  const Game& game_;
  SolveOptions options_;
  std::vector<std::size_t> usable_;
  std::vector<int> level_counts_;
  int n_ = 0;
  // rank_[l][j][t]: rank of p_l(usable_[j], t) among level l's values.
  std::vector<std::vector<std::vector<int>>> rank_;
  std::vector<std::vector<Rational>> values_;  // sorted distinct, per level
  std::vector<std::vector<Rational>> cost_;    // [j][t] = t d(t)
  // Count tuples <= level_counts_, lexicographic; index is mixed radix.
  std::vector<std::vector<int>> tuples_;
  std::vector<int> tuple_total_;
};

SolveReport solve_symmetric_singleton(const Game& game,
                                      const SolveOptions& options = {});

// Minimum social cost over all states, by solving the all-altruist game.
struct Optimum {
  std::vector<int> counts;  // per resource
  Rational cost;
  State state;
};
Optimum social_optimum_symmetric(const Game& game,
                                 const SolveOptions& options = {});

struct Thresholds {
  std::optional<std::size_t> n1_plus;   // some equilibrium is optimal
  std::optional<std::size_t> n1_minus;  // every equilibrium is optimal
  Rational optimum;
  // Per altruist count k = 0..n: best and worst equilibrium cost, if any.
  std::vector<std::optional<std::pair<Rational, Rational>>> by_count;
};

// Sweeps k = 0..n pure altruists (agents 0..k-1) against n - k pure egoists.
Thresholds thresholds(const Game& game, const SolveOptions& options = {});

}  // namespace altruist

#endif  // ALTRUIST_SINGLETON_DP_HPP_
