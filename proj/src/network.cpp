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

#include "altruist/network.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "altruist/errors.hpp"

namespace altruist {

std::size_t NetworkGame::add_node(const std::string& id) {
  if (std::find(nodes_.begin(), nodes_.end(), id) != nodes_.end()) {
    throw ValidationError("duplicate node id '" + id + "'");
  }
  nodes_.push_back(id);
  return nodes_.size() - 1;
}

std::size_t NetworkGame::node(const std::string& id) {
  auto it = std::find(nodes_.begin(), nodes_.end(), id);
  if (it != nodes_.end()) return static_cast<std::size_t>(it - nodes_.begin());
  nodes_.push_back(id);
  return nodes_.size() - 1;
}

std::size_t NetworkGame::node_index(const std::string& id) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end()) throw ValidationError("unknown node '" + id + "'");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t NetworkGame::add_edge(const std::string& from,
                                  const std::string& to, DelayFunction delay,
                                  std::string id) {
  if (id.empty()) id = "a" + std::to_string(edges_.size());
  for (const auto& e : edges_) {
    if (e.id == id) throw ValidationError("duplicate edge id '" + id + "'");
  }
  edges_.push_back(
      Edge{std::move(id), node_index(from), node_index(to), std::move(delay)});
  return edges_.size() - 1;
}

std::size_t NetworkGame::add_player(const std::string& source,
                                    const std::string& target, Rational beta,
                                    std::string id) {
  if (id.empty()) id = "p" + std::to_string(players_.size());
  players_.push_back(Player{std::move(id), node_index(source),
                            node_index(target), std::move(beta)});
  return players_.size() - 1;
}

std::size_t NetworkGame::edge_index(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  throw ValidationError("unknown edge '" + id + "'");
}

std::vector<std::vector<std::size_t>> simple_paths(const NetworkGame& net,
                                                   std::size_t source,
                                                   std::size_t target,
                                                   std::size_t cap) {
  const auto& edges = net.edges();
  std::vector<std::vector<std::size_t>> out(net.nodes().size());
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].from].push_back(e);
  for (auto& adj : out) {
    std::stable_sort(adj.begin(), adj.end(),
                     [&](std::size_t a, std::size_t b) {
                       return edges[a].to < edges[b].to;
                     });
  }

  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> path;
  std::vector<char> on_path(net.nodes().size(), 0);

  // Iterative DFS; frame = (node, next out-edge position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(source, 0);
  on_path[source] = 1;
  if (source == target) {
    throw ValidationError("player source equals target ('" +
                          net.nodes()[source] + "')");
  }
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos == out[v].size()) {
      on_path[v] = 0;
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const std::size_t e = out[v][pos++];
    const std::size_t w = edges[e].to;
    if (on_path[w]) continue;
    if (w == target) {
      path.push_back(e);
      paths.push_back(path);
      path.pop_back();
      if (paths.size() > cap) {
        throw BudgetExceededError("more than " + std::to_string(cap) +
                                  " simple paths from '" +
                                  net.nodes()[source] + "' to '" +
                                  net.nodes()[target] + "'");
      }
      continue;
    }
    path.push_back(e);
    on_path[w] = 1;
    stack.emplace_back(w, 0);
  }
  return paths;
}

Game expand_paths(const NetworkGame& net, std::size_t cap) {
  std::vector<Resource> resources;
  resources.reserve(net.edges().size());
  for (const auto& e : net.edges()) resources.push_back({e.id, e.delay});

  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::vector<std::string>>>
      cache;
  std::vector<AgentSpec> agents;
  for (const auto& p : net.players()) {
    auto key = std::make_pair(p.source, p.target);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<std::vector<std::string>> strategies;
      for (const auto& path : simple_paths(net, p.source, p.target, cap)) {
        std::vector<std::string> ids;
        for (auto e : path) ids.push_back(net.edges()[e].id);
        strategies.push_back(std::move(ids));
      }
      if (strategies.empty()) {
        throw ValidationError("no path from '" + net.nodes()[p.source] +
                              "' to '" + net.nodes()[p.target] + "'");
      }
      it = cache.emplace(key, std::move(strategies)).first;
    }
    agents.push_back(AgentSpec{p.id, p.beta, it->second});
  }
  return Game(std::move(resources), std::move(agents));
}

namespace {

bool is_constant(const DelayFunction& d) {
  const auto* f = std::get_if<DelayFunction::Affine>(&d.form());
  return f != nullptr && f->a.is_zero() && f->b.sign() > 0;
}

}  // namespace

NetworkGame affine_to_parallel(const NetworkGame& net, std::size_t copies) {
  if (copies == 0) throw ValidationError("need at least one parallel copy");
  NetworkGame out;
  for (const auto& v : net.nodes()) out.add_node(v);
  for (const auto& e : net.edges()) {
    const auto& from = net.nodes()[e.from];
    const auto& to = net.nodes()[e.to];
    if (!is_constant(e.delay)) {
      out.add_edge(from, to, e.delay, e.id);
      continue;
    }
    const auto& b = std::get<DelayFunction::Affine>(e.delay.form()).b;
    for (std::size_t k = 0; k < copies; ++k) {
      out.add_edge(from, to, DelayFunction::linear(b),
                   e.id + "#" + std::to_string(k));
    }
  }
  for (const auto& p : net.players()) {
    out.add_player(net.nodes()[p.source], net.nodes()[p.target], p.beta, p.id);
  }
  return out;
}

Game affine_to_parallel(const Game& game, std::size_t copies) {
  if (copies == 0) throw ValidationError("need at least one parallel copy");
  std::vector<Resource> resources;
  // copy_ids[r] lists the ids standing in for original resource r.
  std::vector<std::vector<std::string>> copy_ids(game.num_resources());
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    const auto& res = game.resource(r);
    if (!is_constant(res.delay)) {
      resources.push_back(res);
      copy_ids[r].push_back(res.id);
      continue;
    }
    const auto& b = std::get<DelayFunction::Affine>(res.delay.form()).b;
    for (std::size_t k = 0; k < copies; ++k) {
      std::string id = res.id + "#" + std::to_string(k);
      resources.push_back({id, DelayFunction::linear(b)});
      copy_ids[r].push_back(std::move(id));
    }
  }
  std::vector<AgentSpec> agents;
  for (const auto& a : game.agents()) {
    AgentSpec spec{a.id, a.beta, {}};
    for (const auto& s : a.strategies) {
      std::vector<std::vector<std::string>> partial{{}};
      for (auto r : s) {
        std::vector<std::vector<std::string>> next;
        for (const auto& prefix : partial) {
          for (const auto& id : copy_ids[r]) {
            auto extended = prefix;
            extended.push_back(id);
            next.push_back(std::move(extended));
          }
        }
        partial = std::move(next);
      }
      for (auto& p : partial) spec.strategies.push_back(std::move(p));
    }
    agents.push_back(std::move(spec));
  }
  return Game(std::move(resources), std::move(agents));
}

}  // namespace altruist
