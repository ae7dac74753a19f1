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

#include "altruist/game_io.hpp"

#include <fstream>
#include <variant>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    throw ValidationError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) {
    throw ValidationError(std::string("field '") + key + "' must be an array");
  }
  return v;
}

std::string optional_id(const Json& j, const char* key) {
  if (j.contains(key)) return string_field(j, key);
  return {};
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    // Shortest round-trip text of the double, parsed as an exact decimal.
    return Rational::parse(j.dump());
  }
  throw ValidationError("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return r.to_string(); }

DelayFunction delay_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "table") {
    std::vector<Rational> values;
    for (const auto& v : array_field(j, "values")) {
      values.push_back(rational_from_json(v));
    }
    return DelayFunction::table(std::move(values));
  }
  if (kind == "linear") return DelayFunction::linear(rational_from_json(field(j, "a")));
  if (kind == "affine") {
    return DelayFunction::affine(rational_from_json(field(j, "a")),
                                 rational_from_json(field(j, "b")));
  }
  if (kind == "quadratic") {
    return DelayFunction::quadratic(rational_from_json(field(j, "a")));
  }
  throw ValidationError("unknown delay kind '" + kind + "'");
}

Json delay_to_json(const DelayFunction& d) {
  Json j;
  if (const auto* t = std::get_if<DelayFunction::Table>(&d.form())) {
    j["kind"] = "table";
    j["values"] = Json::array();
    for (const auto& v : t->values) j["values"].push_back(rational_to_json(v));
  } else if (const auto* l = std::get_if<DelayFunction::Linear>(&d.form())) {
    j["kind"] = "linear";
    j["a"] = rational_to_json(l->a);
  } else if (const auto* f = std::get_if<DelayFunction::Affine>(&d.form())) {
    j["kind"] = "affine";
    j["a"] = rational_to_json(f->a);
    j["b"] = rational_to_json(f->b);
  } else {
    const auto& q = std::get<DelayFunction::Quadratic>(d.form());
    j["kind"] = "quadratic";
    j["a"] = rational_to_json(q.a);
  }
  return j;
}

Game game_from_json(const Json& j) {
  std::vector<Resource> resources;
  for (const auto& r : array_field(j, "resources")) {
    resources.push_back({string_field(r, "id"), delay_from_json(field(r, "delay"))});
  }
  std::vector<AgentSpec> agents;
  for (const auto& a : array_field(j, "agents")) {
    AgentSpec spec{string_field(a, "id"), rational_from_json(field(a, "beta")),
                   {}};
    for (const auto& s : array_field(a, "strategies")) {
      if (!s.is_array()) throw ValidationError("strategy must be an array");
      std::vector<std::string> ids;
      for (const auto& id : s) {
        if (!id.is_string()) {
          throw ValidationError("resource reference must be a string");
        }
        ids.push_back(id.get<std::string>());
      }
      spec.strategies.push_back(std::move(ids));
    }
    agents.push_back(std::move(spec));
  }
  return Game(std::move(resources), std::move(agents));
}

Json game_to_json(const Game& game) {
  Json j;
  j["resources"] = Json::array();
  for (const auto& r : game.resources()) {
    j["resources"].push_back({{"id", r.id}, {"delay", delay_to_json(r.delay)}});
  }
  j["agents"] = Json::array();
  for (const auto& a : game.agents()) {
    Json strategies = Json::array();
    for (const auto& s : a.strategies) {
      Json ids = Json::array();
      for (auto r : s) ids.push_back(game.resource(r).id);
      strategies.push_back(std::move(ids));
    }
    j["agents"].push_back({{"id", a.id},
                           {"beta", rational_to_json(a.beta)},
                           {"strategies", std::move(strategies)}});
  }
  return j;
}

bool is_network_json(const Json& j) {
  return j.is_object() && j.contains("graph");
}

NetworkGame network_from_json(const Json& j) {
  NetworkGame net;
  const Json& graph = field(j, "graph");
  for (const auto& v : array_field(graph, "nodes")) {
    if (!v.is_string()) throw ValidationError("node id must be a string");
    net.add_node(v.get<std::string>());
  }
  for (const auto& e : array_field(graph, "edges")) {
    net.add_edge(string_field(e, "from"), string_field(e, "to"),
                 delay_from_json(field(e, "delay")), optional_id(e, "id"));
  }
  for (const auto& p : array_field(j, "players")) {
    net.add_player(string_field(p, "source"), string_field(p, "target"),
                   rational_from_json(field(p, "beta")), optional_id(p, "id"));
  }
  return net;
}

Json network_to_json(const NetworkGame& net) {
  Json j;
  j["graph"]["nodes"] = net.nodes();
  j["graph"]["edges"] = Json::array();
  for (const auto& e : net.edges()) {
    j["graph"]["edges"].push_back({{"id", e.id},
                                   {"from", net.nodes()[e.from]},
                                   {"to", net.nodes()[e.to]},
                                   {"delay", delay_to_json(e.delay)}});
  }
  j["players"] = Json::array();
  for (const auto& p : net.players()) {
    j["players"].push_back({{"id", p.id},
                            {"source", net.nodes()[p.source]},
                            {"target", net.nodes()[p.target]},
                            {"beta", rational_to_json(p.beta)}});
  }
  return j;
}

Game load_game(const Json& j, std::size_t path_cap) {
  if (is_network_json(j)) return expand_paths(network_from_json(j), path_cap);
  return game_from_json(j);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("invalid JSON in '" + path.string() +
                          "': " + e.what());
  }
}

CongestionVector congestion_from_json(const Game& game, const Json& j) {
  if (!j.is_object()) {
    throw ValidationError("congestion vector must be an object");
  }
  CongestionVector loads{std::vector<int>(game.num_resources(), 0)};
  for (const auto& [id, value] : j.items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw ValidationError("congestion of '" + id +
                            "' must be a non-negative integer");
    }
    loads.load[game.resource_index(id)] = value.get<int>();
  }
  return loads;
}

Json congestion_to_json(const Game& game, const CongestionVector& loads) {
  Json j = Json::object();
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    j[game.resource(r).id] = loads.load.at(r);
  }
  return j;
}

}  // namespace altruist
