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

// Core model of atomic congestion games whose agents weigh their own delay
// against the social cost. An agent i with altruism level beta_i perceives
//
//   c_i(S) = beta_i * c(S) + (1 - beta_i) * d_i(S),
//
// where c(S) = sum_e n_e d_e(n_e) is the social cost and d_i(S) the agent's
// own delay. For unilateral moves this is equivalent to a player-specific
// delay (1 - beta) d_e(n) + beta d'_e(n), with the marginal social delay
// d'_e(n) = n d_e(n) - (n - 1) d_e(n - 1).

#ifndef ALTRUIST_GAME_HPP_
#define ALTRUIST_GAME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "altruist/rational.hpp"

namespace altruist {

enum class DelayKind { kTable, kLinear, kAffine, kQuadratic };

// Non-decreasing, non-negative delay as a function of congestion.
class DelayFunction {
 public:
  struct Table {
    std::vector<Rational> values;  // values[k] = d(k + 1)
  };
  struct Linear {
    Rational a;
  };
  struct Affine {
    Rational a;
    Rational b;
  };
  struct Quadratic {
    Rational a;
  };
  using Form = std::variant<Table, Linear, Affine, Quadratic>;

  DelayFunction() : form_(Linear{Rational(0)}) {}
  explicit DelayFunction(Form form);

  static DelayFunction table(std::vector<Rational> values);
  static DelayFunction linear(Rational a);
  static DelayFunction affine(Rational a, Rational b);
  static DelayFunction quadratic(Rational a);
  static DelayFunction constant(Rational b) {
    return affine(Rational(0), std::move(b));
  }

  // d(x) for x >= 1; d(0) is reported as 0 (it is only ever multiplied by 0).
  // Throws ValidationError when x exceeds a table's length.
  Rational operator()(int congestion) const;

  DelayKind kind() const;
  const Form& form() const { return form_; }
  // Largest congestion at which the function is defined, if bounded.
  std::optional<int> max_congestion() const;

  friend bool operator==(const DelayFunction&, const DelayFunction&);

 private:
  Form form_;
};

bool operator==(const DelayFunction::Table&, const DelayFunction::Table&);
bool operator==(const DelayFunction::Linear&, const DelayFunction::Linear&);
bool operator==(const DelayFunction::Affine&, const DelayFunction::Affine&);
bool operator==(const DelayFunction::Quadratic&,
                const DelayFunction::Quadratic&);

// d'(n) = n d(n) - (n - 1) d(n - 1), with d'(0) = 0.
Rational altruistic_delay(const DelayFunction& d, int n);

struct Resource {
  std::string id;
  DelayFunction delay;
};

// A strategy is a sorted, duplicate-free list of resource indices.
using Strategy = std::vector<std::size_t>;

// Agent description with strategies named by resource id.
struct AgentSpec {
  std::string id;
  Rational beta;
  std::vector<std::vector<std::string>> strategies;
};

struct Agent {
  std::string id;
  Rational beta;
  std::vector<Strategy> strategies;
};

// Immutable, validated game. Construction precomputes d_e(t), d'_e(t) and the
// perceived delay of every distinct altruism level for t = 0..n, so all
// downstream evaluation is table lookups and exact additions.
class Game {
 public:
  Game(std::vector<Resource> resources, std::vector<AgentSpec> agents);

  std::size_t num_resources() const { return resources_.size(); }
  std::size_t num_agents() const { return agents_.size(); }
  const std::vector<Resource>& resources() const { return resources_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Resource& resource(std::size_t r) const { return resources_.at(r); }
  const Agent& agent(std::size_t i) const { return agents_.at(i); }

  std::size_t resource_index(const std::string& id) const;
  std::size_t agent_index(const std::string& id) const;

  bool is_singleton() const { return singleton_; }
  bool is_symmetric() const { return symmetric_; }

  // Tabulated d_e(t) and d'_e(t) for 0 <= t <= n.
  const Rational& delay(std::size_t r, int t) const;
  const Rational& marginal(std::size_t r, int t) const;

  // Distinct altruism levels in increasing order and each agent's level.
  const std::vector<Rational>& levels() const { return levels_; }
  std::size_t level_of(std::size_t agent) const { return agent_level_[agent]; }
  // (1 - beta) d_e(t) + beta d'_e(t) for the given level.
  const Rational& perceived(std::size_t level, std::size_t r, int t) const;

  // Same resources and strategies with new altruism levels.
  Game with_betas(const std::vector<Rational>& betas) const;

  std::vector<AgentSpec> agent_specs() const;

 private:
  void check_range(std::size_t r, int t) const;

  std::vector<Resource> resources_;
  std::vector<Agent> agents_;
  std::unordered_map<std::string, std::size_t> resource_by_id_;
  std::unordered_map<std::string, std::size_t> agent_by_id_;
  bool singleton_ = true;
  bool symmetric_ = true;
  std::vector<std::vector<Rational>> delay_;     // [r][t]
  std::vector<std::vector<Rational>> marginal_;  // [r][t]
  std::vector<Rational> levels_;
  std::vector<std::size_t> agent_level_;
  std::vector<std::vector<std::vector<Rational>>> perceived_;  // [l][r][t]
};

struct State {
  std::vector<std::size_t> choice;  // index into each agent's strategy list
  friend bool operator==(const State&, const State&) = default;
};

struct CongestionVector {
  std::vector<int> load;  // indexed by resource
  friend bool operator==(const CongestionVector&,
                         const CongestionVector&) = default;
};

struct MoveDelta {
  Rational delta_private;  // d_i(S) - d_i(S')
  Rational delta_social;   // c(S) - c(S')
};

struct Deviation {
  std::size_t agent = 0;
  std::size_t strategy = 0;
  Rational gain;  // c_i(S) - c_i(S') > 0
};

struct NashCheck {
  bool is_nash = true;
  std::optional<Deviation> witness;
};

// Throws ValidationError unless every choice indexes the agent's strategies.
void validate_state(const Game& game, const State& state);

CongestionVector congestions(const Game& game, const State& state);

Rational social_cost(const Game& game, const CongestionVector& loads);
Rational social_cost(const Game& game, const State& state);

// d_i(S): sum of d_e(n_e) over the agent's chosen resources.
Rational own_delay(const Game& game, const State& state, std::size_t agent);

Rational individual_cost(const Game& game, const State& state,
                         std::size_t agent);
Rational individual_cost(const Game& game, const State& state,
                         const std::string& agent_id);

// Deltas for agent switching to new_strategy. Computed symbolically from the
// pre-move congestions: resources in both strategies cancel, left resources
// contribute d(n_e) / d'(n_e), entered ones d(n_e + 1) / d'(n_e + 1).
MoveDelta move_delta(const Game& game, const State& state, std::size_t agent,
                     std::size_t new_strategy);

// c_i(S) - c_i(S') for the move, via the agent's perceived delays.
Rational cost_decrease(const Game& game, const CongestionVector& loads,
                       std::size_t agent, std::size_t from, std::size_t to);

// A state is a Nash equilibrium iff no agent has a strictly improving move.
// The witness is the lowest-indexed agent with an improving move, paired
// with its lowest-indexed improving strategy.
NashCheck is_nash(const Game& game, const State& state);
NashCheck is_nash(const Game& game, const State& state,
                  const CongestionVector& loads);

}  // namespace altruist

#endif  // ALTRUIST_GAME_HPP_
