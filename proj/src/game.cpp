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

#include "altruist/game.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_nonnegative(const Rational& v, const char* what) {
  if (v.sign() < 0) {
    throw ValidationError(std::string(what) + " must be non-negative, got " +
                          v.to_string());
  }
}

}  // namespace

bool operator==(const DelayFunction::Table& a, const DelayFunction::Table& b) {
  return a.values == b.values;
}
bool operator==(const DelayFunction::Linear& a,
                const DelayFunction::Linear& b) {
  return a.a == b.a;
}
bool operator==(const DelayFunction::Affine& a,
                const DelayFunction::Affine& b) {
  return a.a == b.a && a.b == b.b;
}
bool operator==(const DelayFunction::Quadratic& a,
                const DelayFunction::Quadratic& b) {
  return a.a == b.a;
}

DelayFunction::DelayFunction(Form form) : form_(std::move(form)) {
  std::visit(
      Overloaded{
          [](const Table& t) {
            if (t.values.empty()) {
              throw ValidationError("delay table must not be empty");
            }
            for (std::size_t k = 0; k < t.values.size(); ++k) {
              require_nonnegative(t.values[k], "delay table entry");
              if (k > 0 && t.values[k] < t.values[k - 1]) {
                throw ValidationError(
                    "delay table must be non-decreasing (entry " +
                    std::to_string(k + 1) + " is " + t.values[k].to_string() +
                    " after " + t.values[k - 1].to_string() + ")");
              }
            }
          },
          [](const Linear& l) { require_nonnegative(l.a, "linear slope"); },
          [](const Affine& f) {
            require_nonnegative(f.a, "affine slope");
            require_nonnegative(f.b, "affine offset");
          },
          [](const Quadratic& q) {
            require_nonnegative(q.a, "quadratic coefficient");
          },
      },
      form_);
}

DelayFunction DelayFunction::table(std::vector<Rational> values) {
  return DelayFunction(Table{std::move(values)});
}
DelayFunction DelayFunction::linear(Rational a) {
  return DelayFunction(Linear{std::move(a)});
}
DelayFunction DelayFunction::affine(Rational a, Rational b) {
  return DelayFunction(Affine{std::move(a), std::move(b)});
}
DelayFunction DelayFunction::quadratic(Rational a) {
  return DelayFunction(Quadratic{std::move(a)});
}

Rational DelayFunction::operator()(int x) const {
  if (x < 0) throw ValidationError("negative congestion");
  if (x == 0) return Rational(0);
  const Rational rx(x);
  return std::visit(
      Overloaded{
          [x](const Table& t) -> Rational {
            if (static_cast<std::size_t>(x) > t.values.size()) {
              throw ValidationError(
                  "congestion " + std::to_string(x) +
                  " exceeds delay table length " +
                  std::to_string(t.values.size()));
            }
            return t.values[static_cast<std::size_t>(x) - 1];
          },
          [&rx](const Linear& l) { return l.a * rx; },
          [&rx](const Affine& f) { return f.a * rx + f.b; },
          [&rx](const Quadratic& q) { return q.a * rx * rx; },
      },
      form_);
}

DelayKind DelayFunction::kind() const {
  return std::visit(Overloaded{
                        [](const Table&) { return DelayKind::kTable; },
                        [](const Linear&) { return DelayKind::kLinear; },
                        [](const Affine&) { return DelayKind::kAffine; },
                        [](const Quadratic&) { return DelayKind::kQuadratic; },
                    },
                    form_);
}

std::optional<int> DelayFunction::max_congestion() const {
  if (const auto* t = std::get_if<Table>(&form_)) {
    return static_cast<int>(t->values.size());
  }
  return std::nullopt;
}

bool operator==(const DelayFunction& a, const DelayFunction& b) {
  return a.form_ == b.form_;
}

Rational altruistic_delay(const DelayFunction& d, int n) {
  if (n < 0) throw ValidationError("negative congestion");
  if (n == 0) return Rational(0);
  return Rational(n) * d(n) - Rational(n - 1) * d(n - 1);
}

Game::Game(std::vector<Resource> resources, std::vector<AgentSpec> agents)
    : resources_(std::move(resources)) {
  for (std::size_t r = 0; r < resources_.size(); ++r) {
    if (!resource_by_id_.emplace(resources_[r].id, r).second) {
      throw ValidationError("duplicate resource id '" + resources_[r].id +
                            "'");
    }
  }

  agents_.reserve(agents.size());
  for (auto& spec : agents) {
    if (!agent_by_id_.emplace(spec.id, agents_.size()).second) {
      throw ValidationError("duplicate agent id '" + spec.id + "'");
    }
    if (spec.beta.sign() < 0 || Rational(1) < spec.beta) {
      throw ValidationError("altruism level of agent '" + spec.id +
                            "' must lie in [0, 1], got " +
                            spec.beta.to_string());
    }
    if (spec.strategies.empty()) {
      throw ValidationError("agent '" + spec.id + "' has no strategies");
    }
    Agent agent{spec.id, spec.beta, {}};
    std::set<Strategy> seen;
    for (const auto& ids : spec.strategies) {
      if (ids.empty()) {
        throw ValidationError("agent '" + spec.id + "' has an empty strategy");
      }
      Strategy s;
      s.reserve(ids.size());
      for (const auto& id : ids) s.push_back(resource_index(id));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (seen.insert(s).second) agent.strategies.push_back(std::move(s));
    }
    agents_.push_back(std::move(agent));
  }

  std::optional<std::set<Strategy>> first;
  for (const auto& a : agents_) {
    for (const auto& s : a.strategies) {
      if (s.size() != 1) singleton_ = false;
    }
    std::set<Strategy> canon(a.strategies.begin(), a.strategies.end());
    if (!first) {
      first = std::move(canon);
    } else if (*first != canon) {
      symmetric_ = false;
    }
  }

  const int n = static_cast<int>(agents_.size());
  delay_.resize(resources_.size());
  marginal_.resize(resources_.size());
  for (std::size_t r = 0; r < resources_.size(); ++r) {
    const auto& d = resources_[r].delay;
    if (auto cap = d.max_congestion(); cap && *cap < n) {
      throw ValidationError("delay table of resource '" + resources_[r].id +
                            "' has " + std::to_string(*cap) +
                            " entries but the game has " + std::to_string(n) +
                            " agents");
    }
    delay_[r].reserve(n + 1);
    marginal_[r].reserve(n + 1);
    for (int t = 0; t <= n; ++t) {
      delay_[r].push_back(d(t));
      marginal_[r].push_back(t == 0 ? Rational(0)
                                    : Rational(t) * delay_[r][t] -
                                          Rational(t - 1) * delay_[r][t - 1]);
    }
  }

  std::set<Rational> distinct;
  for (const auto& a : agents_) distinct.insert(a.beta);
  levels_.assign(distinct.begin(), distinct.end());
  agent_level_.reserve(agents_.size());
  for (const auto& a : agents_) {
    agent_level_.push_back(static_cast<std::size_t>(
        std::lower_bound(levels_.begin(), levels_.end(), a.beta) -
        levels_.begin()));
  }
  perceived_.resize(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Rational& beta = levels_[l];
    const Rational selfish = Rational(1) - beta;
    perceived_[l].resize(resources_.size());
    for (std::size_t r = 0; r < resources_.size(); ++r) {
      perceived_[l][r].reserve(n + 1);
      for (int t = 0; t <= n; ++t) {
        perceived_[l][r].push_back(selfish * delay_[r][t] +
                                   beta * marginal_[r][t]);
      }
    }
  }
}

std::size_t Game::resource_index(const std::string& id) const {
  auto it = resource_by_id_.find(id);
  if (it == resource_by_id_.end()) {
    throw ValidationError("unknown resource id '" + id + "'");
  }
  return it->second;
}

std::size_t Game::agent_index(const std::string& id) const {
  auto it = agent_by_id_.find(id);
  if (it == agent_by_id_.end()) {
    throw ValidationError("unknown agent id '" + id + "'");
  }
  return it->second;
}

void Game::check_range(std::size_t r, int t) const {
  if (r >= resources_.size()) throw ValidationError("resource out of range");
  if (t < 0 || t > static_cast<int>(agents_.size())) {
    throw ValidationError("congestion " + std::to_string(t) +
                          " outside 0.." + std::to_string(agents_.size()));
  }
}

const Rational& Game::delay(std::size_t r, int t) const {
  check_range(r, t);
  return delay_[r][t];
}

const Rational& Game::marginal(std::size_t r, int t) const {
  check_range(r, t);
  return marginal_[r][t];
}

const Rational& Game::perceived(std::size_t level, std::size_t r,
                                int t) const {
  check_range(r, t);
  return perceived_.at(level)[r][t];
}

Game Game::with_betas(const std::vector<Rational>& betas) const {
  if (betas.size() != agents_.size()) {
    throw ValidationError("altruism level count does not match agent count");
  }
  auto specs = agent_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i].beta = betas[i];
  return Game(resources_, std::move(specs));
}

std::vector<AgentSpec> Game::agent_specs() const {
  std::vector<AgentSpec> specs;
  specs.reserve(agents_.size());
  for (const auto& a : agents_) {
    AgentSpec spec{a.id, a.beta, {}};
    for (const auto& s : a.strategies) {
      std::vector<std::string> ids;
      for (auto r : s) ids.push_back(resources_[r].id);
      spec.strategies.push_back(std::move(ids));
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

void validate_state(const Game& game, const State& state) {
  if (state.choice.size() != game.num_agents()) {
    throw ValidationError("state has " + std::to_string(state.choice.size()) +
                          " choices for " + std::to_string(game.num_agents()) +
                          " agents");
  }
  for (std::size_t i = 0; i < state.choice.size(); ++i) {
    if (state.choice[i] >= game.agent(i).strategies.size()) {
      throw ValidationError("strategy index " +
                            std::to_string(state.choice[i]) +
                            " out of range for agent '" + game.agent(i).id +
                            "'");
    }
  }
}

CongestionVector congestions(const Game& game, const State& state) {
  validate_state(game, state);
  CongestionVector loads{std::vector<int>(game.num_resources(), 0)};
  for (std::size_t i = 0; i < state.choice.size(); ++i) {
    for (auto r : game.agent(i).strategies[state.choice[i]]) ++loads.load[r];
  }
  return loads;
}

Rational social_cost(const Game& game, const CongestionVector& loads) {
  Rational total;
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    const int n = loads.load.at(r);
    if (n > 0) total += Rational(n) * game.delay(r, n);
  }
  return total;
}

Rational social_cost(const Game& game, const State& state) {
  const auto loads = congestions(game, state);
  Rational total = social_cost(game, loads);
#ifndef NDEBUG
  Rational by_agent;
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    for (auto r : game.agent(i).strategies[state.choice[i]]) {
      by_agent += game.delay(r, loads.load[r]);
    }
  }
  assert(by_agent == total && "double-counting identity violated");
#endif
  return total;
}

Rational own_delay(const Game& game, const State& state, std::size_t agent) {
  const auto loads = congestions(game, state);
  if (agent >= game.num_agents()) throw ValidationError("unknown agent");
  Rational d;
  for (auto r : game.agent(agent).strategies[state.choice[agent]]) {
    d += game.delay(r, loads.load[r]);
  }
  return d;
}

Rational individual_cost(const Game& game, const State& state,
                         std::size_t agent) {
  if (agent >= game.num_agents()) throw ValidationError("unknown agent");
  const Rational& beta = game.agent(agent).beta;
  return beta * social_cost(game, state) +
         (Rational(1) - beta) * own_delay(game, state, agent);
}

Rational individual_cost(const Game& game, const State& state,
                         const std::string& agent_id) {
  return individual_cost(game, state, game.agent_index(agent_id));
}

namespace {

// Walks the symmetric difference of two sorted strategies.
template <class Left, class Entered>
void for_each_difference(const Strategy& from, const Strategy& to, Left left,
                         Entered entered) {
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < from.size() || b < to.size()) {
    if (b == to.size() || (a < from.size() && from[a] < to[b])) {
      left(from[a++]);
    } else if (a == from.size() || to[b] < from[a]) {
      entered(to[b++]);
    } else {
      ++a;
      ++b;
    }
  }
}

}  // namespace

MoveDelta move_delta(const Game& game, const State& state, std::size_t agent,
                     std::size_t new_strategy) {
  const auto loads = congestions(game, state);
  if (agent >= game.num_agents()) throw ValidationError("unknown agent");
  const auto& strategies = game.agent(agent).strategies;
  if (new_strategy >= strategies.size()) {
    throw ValidationError("strategy index out of range");
  }
  MoveDelta delta;
  for_each_difference(
      strategies[state.choice[agent]], strategies[new_strategy],
      [&](std::size_t r) {
        delta.delta_private += game.delay(r, loads.load[r]);
        delta.delta_social += game.marginal(r, loads.load[r]);
      },
      [&](std::size_t r) {
        delta.delta_private -= game.delay(r, loads.load[r] + 1);
        delta.delta_social -= game.marginal(r, loads.load[r] + 1);
      });
  return delta;
}

Rational cost_decrease(const Game& game, const CongestionVector& loads,
                       std::size_t agent, std::size_t from, std::size_t to) {
  const auto& strategies = game.agent(agent).strategies;
  const std::size_t level = game.level_of(agent);
  Rational gain;
  for_each_difference(
      strategies[from], strategies[to],
      [&](std::size_t r) { gain += game.perceived(level, r, loads.load[r]); },
      [&](std::size_t r) {
        gain -= game.perceived(level, r, loads.load[r] + 1);
      });
  return gain;
}

NashCheck is_nash(const Game& game, const State& state,
                  const CongestionVector& loads) {
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    const std::size_t level = game.level_of(i);
    const auto& strategies = game.agent(i).strategies;
    const std::size_t current = state.choice[i];
    const bool single = strategies[current].size() == 1;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      if (s == current) continue;
      if (single && strategies[s].size() == 1) {
        // Singleton fast path: one comparison, no arithmetic.
        const auto from = strategies[current][0];
        const auto to = strategies[s][0];
        const auto& stay = game.perceived(level, from, loads.load[from]);
        const auto& go = game.perceived(level, to, loads.load[to] + 1);
        if (go < stay) return {false, Deviation{i, s, stay - go}};
        continue;
      }
      Rational gain = cost_decrease(game, loads, i, current, s);
      if (gain.sign() > 0) return {false, Deviation{i, s, std::move(gain)}};
    }
  }
  return {true, std::nullopt};
}

NashCheck is_nash(const Game& game, const State& state) {
  return is_nash(game, state, congestions(game, state));
}

}  // namespace altruist
