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

#include "altruist/stabilization.hpp"

#include <algorithm>
#include <numeric>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

void check_target(const Game& game, const CongestionVector& target) {
  if (!game.is_singleton()) {
    throw UnsupportedGameError("stabilization needs a singleton game");
  }
  if (target.load.size() != game.num_resources()) {
    throw ValidationError("target must give a congestion for every resource");
  }
  long sum = 0;
  for (int x : target.load) {
    if (x < 0) throw ValidationError("negative target congestion");
    sum += x;
  }
  if (sum != static_cast<long>(game.num_agents())) {
    throw ValidationError("target congestions sum to " + std::to_string(sum) +
                          " but the game has " +
                          std::to_string(game.num_agents()) + " agents");
  }
}

std::vector<std::size_t> resources_of(const Game& game, std::size_t i) {
  std::vector<std::size_t> out;
  for (const auto& s : game.agent(i).strategies) out.push_back(s.front());
  return out;
}

// Agents by id, slots by (resource id, copy).
std::vector<std::size_t> agent_order(const Game& game) {
  std::vector<std::size_t> order(game.num_agents());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return game.agent(a).id < game.agent(b).id;
  });
  return order;
}

std::vector<std::size_t> slot_order(const Game& game, const SlotGraph& g) {
  std::vector<std::size_t> order(g.slot_resource.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return game.resource(g.slot_resource[a]).id <
           game.resource(g.slot_resource[b]).id;
  });
  return order;
}

std::optional<Assignment> solve(const Game& game, const SlotGraph& g) {
  return min_cost_assignment_lex(g.weight, agent_order(game),
                                 slot_order(game, g));
}

}  // namespace

SlotGraph make_slots(const Game& game, const CongestionVector& target) {
  check_target(game, target);
  SlotGraph g;
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    for (int k = 0; k < target.load[r]; ++k) g.slot_resource.push_back(r);
  }
  g.weight.assign(game.num_agents(),
                  std::vector<std::optional<Rational>>(g.slot_resource.size()));
  return g;
}

SlotGraph altruist_slot_graph(const Game& game,
                              const CongestionVector& target) {
  SlotGraph g = make_slots(game, target);
  const auto& n = target.load;
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    const auto options = resources_of(game, i);
    for (std::size_t s = 0; s < g.slot_resource.size(); ++s) {
      const std::size_t e = g.slot_resource[s];
      if (std::find(options.begin(), options.end(), e) == options.end()) {
        continue;
      }
      bool selfish = true;
      bool altruistic = true;
      for (auto f : options) {
        if (f == e) continue;
        if (game.delay(f, n[f] + 1) < game.delay(e, n[e])) selfish = false;
        if (game.marginal(f, n[f] + 1) < game.marginal(e, n[e])) {
          altruistic = false;
        }
      }
      if (selfish) {
        g.weight[i][s] = Rational(0);
      } else if (altruistic) {
        g.weight[i][s] = Rational(1);
      }
    }
  }
  return g;
}

std::optional<AltruistSet> min_altruist_set(const Game& game,
                                            const CongestionVector& target) {
  const SlotGraph g = altruist_slot_graph(game, target);
  const auto match = solve(game, g);
  if (!match) return std::nullopt;
  AltruistSet out;
  out.state.choice.resize(game.num_agents());
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    const std::size_t slot = match->column_of[i];
    const std::size_t e = g.slot_resource[slot];
    out.resource_of.push_back(e);
    if (*g.weight[i][slot] == Rational(1)) out.altruists.push_back(i);
    const auto options = resources_of(game, i);
    out.state.choice[i] = static_cast<std::size_t>(
        std::find(options.begin(), options.end(), e) - options.begin());
  }
  return out;
}

Allocation min_stability_cost_allocation(const Game& game,
                                         const CongestionVector& target,
                                         const StabilityCosts& costs) {
  SlotGraph g = make_slots(game, target);
  if (costs.size() != game.num_agents()) {
    throw ValidationError("stability costs need one row per agent");
  }
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    if (costs[i].size() != game.num_resources()) {
      throw ValidationError("stability cost row of '" + game.agent(i).id +
                            "' must cover every resource");
    }
    const auto options = resources_of(game, i);
    for (auto e : options) {
      if (!costs[i][e]) {
        throw ValidationError("missing stability cost for agent '" +
                              game.agent(i).id + "' on resource '" +
                              game.resource(e).id + "'");
      }
      if (costs[i][e]->sign() < 0) {
        throw ValidationError("stability costs must be non-negative");
      }
    }
    for (std::size_t s = 0; s < g.slot_resource.size(); ++s) {
      const std::size_t e = g.slot_resource[s];
      if (std::find(options.begin(), options.end(), e) != options.end()) {
        g.weight[i][s] = costs[i][e];
      }
    }
  }
  auto match = solve(game, g);
  if (!match) {
    throw InfeasibleError("no assignment of agents realizes the target");
  }
  Allocation out;
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    out.resource_of.push_back(g.slot_resource[match->column_of[i]]);
  }
  out.total = match->total;
  out.matching = std::move(*match);
  return out;
}

VcgOutcome vcg_mechanism(const Game& game, const CongestionVector& target,
                         const StabilityCosts& reported) {
  VcgOutcome out;
  out.allocation = min_stability_cost_allocation(game, target, reported);
  const SlotGraph full = [&] {
    SlotGraph g = make_slots(game, target);
    for (std::size_t i = 0; i < game.num_agents(); ++i) {
      const auto options = resources_of(game, i);
      for (std::size_t s = 0; s < g.slot_resource.size(); ++s) {
        const std::size_t e = g.slot_resource[s];
        if (std::find(options.begin(), options.end(), e) != options.end()) {
          g.weight[i][s] = reported[i][e];
        }
      }
    }
    return g;
  }();

  const std::size_t n = game.num_agents();
  out.payments.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    WeightMatrix without;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) without.push_back(full.weight[j]);
    }
    const auto pivot = min_cost_assignment(without);
    if (!pivot) {
      throw InfeasibleError("without agent '" + game.agent(i).id +
                            "' the others cannot be placed on the target");
    }
    Rational others = out.allocation.total -
                      *reported[i][out.allocation.resource_of[i]];
    out.payments[i] = pivot->total - others;
  }
  return out;
}

Rational vcg_utility(const VcgOutcome& outcome, const StabilityCosts& truth,
                     std::size_t agent) {
  const std::size_t e = outcome.allocation.resource_of.at(agent);
  const auto& c = truth.at(agent).at(e);
  if (!c) throw ValidationError("true cost missing for allocated resource");
  return outcome.payments.at(agent) - *c;
}

}  // namespace altruist
