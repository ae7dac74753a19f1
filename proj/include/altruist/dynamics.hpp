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

// Sequential better-response dynamics and the potentials that certify their
// convergence.
//
//   Rosenthal        sum_e sum_{x<=n_e} d_e(x); exact for egoist moves.
//   BetaUniform      (1 - beta) Rosenthal + beta c(S); exact when every agent
//                    has altruism level beta.
//   LinearWeighted   for d_e(x) = a_e x:
//                      sum_e a_e n_e (n_e + 1) / 2 + sum_e a_e n_e^2
//                        - sum_i sum_{e in S_i} (2 beta_i - 1)/(beta_i + 1) a_e
//                    which drops by 3/(1 + beta_i) times the mover's cost
//                    decrease on every move, for arbitrary beta_i.

#ifndef ALTRUIST_DYNAMICS_HPP_
#define ALTRUIST_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "altruist/game.hpp"

namespace altruist {

struct PotentialKind {
  enum class Tag { kRosenthal, kBetaUniform, kLinearWeighted };
  Tag tag = Tag::kRosenthal;
  Rational beta;  // BetaUniform only

  static PotentialKind rosenthal() { return {Tag::kRosenthal, Rational(0)}; }
  static PotentialKind beta_uniform(Rational b) {
    return {Tag::kBetaUniform, std::move(b)};
  }
  static PotentialKind linear_weighted() {
    return {Tag::kLinearWeighted, Rational(0)};
  }
  std::string name() const;
};

// Throws UnsupportedGameError when BetaUniform meets heterogeneous levels or
// LinearWeighted meets a delay that is not of kind Linear.
Rational potential(const Game& game, const State& state,
                   const PotentialKind& kind);

// A potential guaranteed to decrease on every improving move of this game:
// Rosenthal for all-egoist games, BetaUniform for uniform altruism, and
// LinearWeighted for all-linear delays. Empty when none applies.
std::optional<PotentialKind> applicable_potential(const Game& game);

struct Policy {
  enum class Kind { kRoundRobin, kRandom, kMaxGain };
  Kind kind = Kind::kRoundRobin;
  std::uint64_t seed = 0;

  static Policy round_robin() { return {Kind::kRoundRobin, 0}; }
  static Policy random(std::uint64_t seed) { return {Kind::kRandom, seed}; }
  static Policy max_gain() { return {Kind::kMaxGain, 0}; }
  static Policy parse(const std::string& name, std::uint64_t seed);
  std::string name() const;
};

struct Move {
  std::size_t agent = 0;
  std::size_t strategy = 0;
  Rational gain;  // strictly positive cost decrease of the mover
};

// Stateful move selection. round_robin scans agents cyclically starting
// after the previous mover and plays that agent's best response; random picks
// uniformly among all improving (agent, strategy) pairs; max_gain picks the
// largest decrease, ties to the lowest agent then lowest strategy.
class MoveSelector {
 public:
  MoveSelector(const Game& game, Policy policy);
  std::optional<Move> next(const State& state, const CongestionVector& loads);

 private:
  const Game& game_;
  Policy policy_;
  std::size_t cursor_ = 0;
  std::mt19937_64 rng_;
};

// One-shot selection from a fresh selector (round robin starts at agent 0).
std::optional<Move> find_improving_move(const Game& game, const State& state,
                                        const Policy& policy);

struct TrajectoryStep {
  std::size_t step = 0;
  std::size_t agent = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  Rational cost_before;
  Rational cost_after;
  std::optional<Rational> potential;  // after the move
};

struct DynamicsOptions {
  std::size_t max_steps = 1'000'000;
  bool detect_cycles = true;
  // Cycle detection switches off once this many distinct states are stored.
  std::size_t state_budget = 1'000'000;
  bool record_trajectory = false;
#ifdef NDEBUG
  bool verify_potential = false;
#else
  bool verify_potential = true;
#endif
};

struct DynamicsReport {
  State final_state;
  bool converged = false;
  std::size_t steps = 0;
  bool cycle_detected = false;
  std::optional<PotentialKind> potential_kind;
  std::vector<TrajectoryStep> trajectory;
};

DynamicsReport run_dynamics(const Game& game, const State& start,
                            const Policy& policy,
                            const DynamicsOptions& options = {});

// "step agent from→to cost_before cost_after potential", one move per line.
void write_trajectory(std::ostream& os, const Game& game,
                      const DynamicsReport& report);

}  // namespace altruist

#endif  // ALTRUIST_DYNAMICS_HPP_
