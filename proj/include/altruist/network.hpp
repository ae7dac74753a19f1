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

#ifndef ALTRUIST_NETWORK_HPP_
#define ALTRUIST_NETWORK_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "altruist/game.hpp"

namespace altruist {

// Directed multigraph whose edges carry delays; every player routes one unit
// from its source to its target along a simple path.
class NetworkGame {
 public:
  struct Edge {
    std::string id;
    std::size_t from = 0;
    std::size_t to = 0;
    DelayFunction delay;
  };
  struct Player {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    Rational beta;
  };

  std::size_t add_node(const std::string& id);
  // Adds the node if missing; returns its index either way.
  std::size_t node(const std::string& id);
  std::size_t node_index(const std::string& id) const;

  std::size_t add_edge(const std::string& from, const std::string& to,
                       DelayFunction delay, std::string id = {});
  std::size_t add_player(const std::string& source, const std::string& target,
                         Rational beta, std::string id = {});

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Player>& players() const { return players_; }
  Edge& edge(std::size_t e) { return edges_.at(e); }
  std::size_t edge_index(const std::string& id) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<Player> players_;
};

// All simple source->target paths of one player as edge-index sequences, in
// depth-first order with out-edges visited by (head node index, edge index).
// Throws BudgetExceededError once more than `cap` paths exist.
std::vector<std::vector<std::size_t>> simple_paths(const NetworkGame& net,
                                                   std::size_t source,
                                                   std::size_t target,
                                                   std::size_t cap);

// Materializes the network as a Game: one resource per edge (named by edge
// id) and, per player, one strategy per simple path. Throws
// BudgetExceededError when a player has more than `cap` paths and
// ValidationError when a target is unreachable.
Game expand_paths(const NetworkGame& net, std::size_t cap);

// Replaces every constant-delay edge b (affine with zero slope) by `copies`
// parallel edges of delay b x. With copies equal to the player count no
// equilibrium is lost or created. Ids become "<id>#<k>".
NetworkGame affine_to_parallel(const NetworkGame& net, std::size_t copies);

// Same transformation on an explicit game: every strategy using a constant
// resource is replaced by one strategy per combination of copies.
Game affine_to_parallel(const Game& game, std::size_t copies);

}  // namespace altruist

#endif  // ALTRUIST_NETWORK_HPP_
