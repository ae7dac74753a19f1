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

// Making a target congestion vector stable in a singleton game: agents are
// matched to resource slots (target[e] copies of every resource e).

#ifndef ALTRUIST_STABILIZATION_HPP_
#define ALTRUIST_STABILIZATION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "altruist/game.hpp"
#include "altruist/matching.hpp"

namespace altruist {

struct SlotGraph {
  std::vector<std::size_t> slot_resource;  // resource of every slot
  WeightMatrix weight;                     // [agent][slot]
};

// Slots of `target` in resource order; every weight forbidden.
SlotGraph make_slots(const Game& game, const CongestionVector& target);

// Weight 0 where the resource is a selfish best response under the target,
// 1 where it is only an altruistic (d') best response, forbidden otherwise.
SlotGraph altruist_slot_graph(const Game& game, const CongestionVector& target);

struct AltruistSet {
  std::vector<std::size_t> altruists;    // agent indices, ascending
  std::vector<std::size_t> resource_of;  // per agent
  State state;
};

// Smallest set of agents that must be pure altruists (all others egoists)
// for some equilibrium to realize `target`; nullopt when none does.
std::optional<AltruistSet> min_altruist_set(const Game& game,
                                            const CongestionVector& target);

// costs[agent][resource]; required for every resource an agent may use.
using StabilityCosts = std::vector<std::vector<std::optional<Rational>>>;

struct Allocation {
  std::vector<std::size_t> resource_of;  // per agent
  Rational total;
  Assignment matching;  // slot-level solution with its dual certificate
};

// Min-cost assignment of agents to the target's slots. Ties go to the
// lexicographically smallest (agent id, resource id) allocation. Throws
// InfeasibleError when no assignment exists.
Allocation min_stability_cost_allocation(const Game& game,
                                         const CongestionVector& target,
                                         const StabilityCosts& costs);

struct VcgOutcome {
  Allocation allocation;
  // Transfer to each agent: (min cost of placing everyone else, one slot
  // left empty) minus (cost of everyone else in the chosen allocation).
  // Never positive.
  std::vector<Rational> payments;
};

// Throws InfeasibleError when the allocation or some pivot problem is
// infeasible.
VcgOutcome vcg_mechanism(const Game& game, const CongestionVector& target,
                         const StabilityCosts& reported);

// -true_cost(agent, allocated resource) + transfer.
Rational vcg_utility(const VcgOutcome& outcome, const StabilityCosts& truth,
                     std::size_t agent);

}  // namespace altruist

#endif  // ALTRUIST_STABILIZATION_HPP_
