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

#include "altruist/generators.hpp"

#include <cstdlib>
#include <sstream>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

std::vector<Rational> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::string var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string zero_edge(const std::string& from, const std::string& to) {
  return from + "->" + to;
}

}  // namespace

void CnfFormula::validate() const {
  std::vector<int> pos(num_vars, 0);
  std::vector<int> neg(num_vars, 0);
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& c = clauses[j];
    if (c.empty() || c.size() > 3) {
      throw ValidationError("clause " + std::to_string(j + 1) +
                            " must have 1 to 3 literals");
    }
    for (const auto& lit : c) {
      if (lit.var >= num_vars) {
        throw ValidationError("clause " + std::to_string(j + 1) +
                              " uses unknown variable " +
                              std::to_string(lit.var + 1));
      }
      auto& count = lit.positive ? pos[lit.var] : neg[lit.var];
      if (++count > 2) {
        throw ValidationError("variable " + var_name(lit.var) + " occurs " +
                              (lit.positive ? "positively" : "negatively") +
                              " more than twice");
      }
    }
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& c : clauses) {
    bool sat = false;
    for (const auto& lit : c) sat = sat || assignment.at(lit.var) == lit.positive;
    if (!sat) return false;
  }
  return true;
}

bool CnfFormula::satisfiable() const {
  if (num_vars > 24) throw BudgetExceededError("truth table too large");
  std::vector<bool> a(num_vars);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_vars); ++mask) {
    for (std::size_t i = 0; i < num_vars; ++i) a[i] = (mask >> i) & 1U;
    if (satisfied_by(a)) return true;
  }
  return false;
}

CnfFormula parse_cnf(std::istream& in) {
  CnfFormula phi;
  bool header = false;
  std::size_t max_var = 0;
  std::vector<Literal> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      long vars = -1;
      long count = -1;
      if (!(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0) {
        throw ValidationError("malformed header line '" + line + "'");
      }
      header = true;
      phi.num_vars = static_cast<std::size_t>(vars);
      continue;
    }
    do {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ValidationError("bad literal '" + tok + "'");
      if (v == 0) {
        if (!pending.empty()) phi.clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(std::labs(v));
      max_var = std::max(max_var, var);
      pending.push_back(Literal{var - 1, v > 0});
    } while (ls >> tok);
    if (!pending.empty()) phi.clauses.push_back(std::move(pending));
    pending.clear();
  }
  if (!header) phi.num_vars = max_var;
  if (max_var > phi.num_vars) {
    throw ValidationError("literal exceeds the declared variable count");
  }
  phi.validate();
  return phi;
}

Game example1() {
  const auto table = DelayFunction::table(ints({4, 8, 9, 11}));
  std::vector<Resource> resources{{"e", table}, {"f", table}};
  std::vector<AgentSpec> agents;
  for (int i = 1; i <= 3; ++i) {
    agents.push_back({"egoist" + std::to_string(i), Rational(0), {{"e"}, {"f"}}});
  }
  agents.push_back({"altruist", Rational(1), {{"e"}, {"f"}}});
  return Game(std::move(resources), std::move(agents));
}

Game footnote_symmetric() {
  std::vector<Resource> resources{
      {"r1", DelayFunction::table(ints({16, 32, 36}))},
      {"r2", DelayFunction::table(ints({45, 45, 45}))}};
  std::vector<AgentSpec> agents;
  for (int i = 1; i <= 3; ++i) {
    agents.push_back({"a" + std::to_string(i), Rational(1), {{"r1"}, {"r2"}}});
  }
  return Game(std::move(resources), std::move(agents));
}

Game footnote_asymmetric() {
  std::vector<Resource> resources{{"r1", DelayFunction::linear(Rational(8))},
                                  {"r2", DelayFunction::linear(Rational(8))},
                                  {"r3", DelayFunction::linear(Rational(4))}};
  std::vector<AgentSpec> agents{{"a1", Rational(1), {{"r1"}, {"r2"}}},
                                {"a2", Rational(1), {{"r2"}, {"r3"}}},
                                {"a3", Rational(1), {{"r2"}, {"r3"}}}};
  return Game(std::move(resources), std::move(agents));
}

std::map<std::string, Game> canned_games() {
  std::map<std::string, Game> out;
  out.emplace("example1", example1());
  out.emplace("footnote_symmetric", footnote_symmetric());
  out.emplace("footnote_asymmetric", footnote_asymmetric());
  return out;
}

Game sat_to_singleton(const CnfFormula& phi) {
  phi.validate();
  const std::size_t n = phi.num_vars;
  const std::size_t agents_total = n + phi.clauses.size() + 4;

  std::vector<Resource> resources;
  for (std::size_t i = 0; i < n; ++i) {
    resources.push_back({"e1_" + var_name(i), DelayFunction::linear(Rational(9))});
    resources.push_back({"e0_" + var_name(i), DelayFunction::linear(Rational(9))});
  }
  resources.push_back({"e0", DelayFunction::affine(Rational(7), Rational(3))});
  std::vector<Rational> small = ints({4, 8});
  while (small.size() < std::max<std::size_t>(agents_total, 3)) {
    small.emplace_back(9);
  }
  resources.push_back({"e1", DelayFunction::table(small)});
  resources.push_back({"e2", DelayFunction::table(small)});

  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < n; ++i) {
    agents.push_back({"X" + std::to_string(i + 1), Rational(0),
                      {{"e1_" + var_name(i)}, {"e0_" + var_name(i)}, {"e0"}}});
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    AgentSpec c{"C" + std::to_string(j + 1), Rational(0), {}};
    for (const auto& lit : phi.clauses[j]) {
      c.strategies.push_back(
          {(lit.positive ? "e0_" : "e1_") + var_name(lit.var)});
    }
    agents.push_back(std::move(c));
  }
  for (int u = 1; u <= 3; ++u) {
    agents.push_back({"u" + std::to_string(u), Rational(0), {{"e1"}, {"e2"}}});
  }
  agents.push_back({"u0", Rational(1), {{"e1"}, {"e2"}, {"e0"}}});
  return Game(std::move(resources), std::move(agents));
}

namespace {

// G_phi. u1 travels s1 -> t', u2 and u3
// s2 -> t', the altruist u0 s0 -> t0. Unnamed edges have delay 0.
NetworkGame base_network(const CnfFormula& phi) {
  NetworkGame g;
  const auto zero = DelayFunction::constant(Rational(0));
  auto edge = [&](const std::string& from, const std::string& to,
                  const DelayFunction& d, const std::string& id) {
    g.node(from);
    g.node(to);
    g.add_edge(from, to, d, id);
  };
  auto link = [&](const std::string& from, const std::string& to) {
    edge(from, to, zero, zero_edge(from, to));
  };

  edge("s1", "a", DelayFunction::constant(Rational(2)), "e1");
  edge("a", "b", DelayFunction::affine(Rational(7), Rational(3)), "e0");
  link("b", "t'");
  edge("s1", "t'", DelayFunction::constant(Rational(37, 2)), "e10");
  link("s1", "P");
  link("s0", "P");
  edge("P", "P'", zero, "e7");
  edge("P'", "Q", DelayFunction::quadratic(Rational(12, 5)), "e4");
  edge("Q", "t0", DelayFunction::constant(Rational(17)), "e2");
  edge("Q", "R", zero, "e5");
  edge("s0", "R", zero, "e8");
  edge("s2", "R", zero, "e9");
  edge("R", "S", DelayFunction::quadratic(Rational(1)), "e6");
  link("S", "t'");
  edge("S", "t0", zero, "e3");

  for (std::size_t i = 0; i < phi.num_vars; ++i) {
    const std::string x = var_name(i);
    for (const char* bit : {"0", "1"}) {
      const std::string p = std::string("p") + bit + "_" + x;
      const std::string q = std::string("q") + bit + "_" + x;
      edge(p, q, DelayFunction::linear(Rational(9)),
           std::string("e") + bit + "_" + x);
      link(q, "t'");
    }
    const std::string s = "s_" + x;
    link(s, "p0_" + x);
    link(s, "p1_" + x);
    link(s, "a");
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const std::string s = "s_c" + std::to_string(j + 1);
    for (const auto& lit : phi.clauses[j]) {
      link(s, (lit.positive ? "p0_" : "p1_") + var_name(lit.var));
    }
  }

  for (std::size_t i = 0; i < phi.num_vars; ++i) {
    g.add_player("s_" + var_name(i), "t'", Rational(0), "X" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    g.add_player("s_c" + std::to_string(j + 1), "t'", Rational(0),
                 "C" + std::to_string(j + 1));
  }
  g.add_player("s1", "t'", Rational(0), "u1");
  g.add_player("s2", "t'", Rational(0), "u2");
  g.add_player("s2", "t'", Rational(0), "u3");
  g.add_player("s0", "t0", Rational(1), "u0");
  return g;
}

}  // namespace

Rational sat_network_big_m(const CnfFormula& phi) {
  phi.validate();
  const NetworkGame g = base_network(phi);
  const int agents = static_cast<int>(g.players().size());
  Rational sum(1);
  for (const auto& e : g.edges()) sum += e.delay(agents);
  return Rational(sum.ceil_to_int64());
}

NetworkGame sat_to_network(const CnfFormula& phi, bool symmetric) {
  phi.validate();
  NetworkGame g = base_network(phi);
  if (!symmetric) return g;

  const Rational M = sat_network_big_m(phi);
  const auto mx = DelayFunction::linear(M);
  const Rational wall =
      M * Rational(static_cast<std::int64_t>(phi.num_vars + phi.clauses.size() + 5));
  NetworkGame w;
  for (const auto& v : g.nodes()) w.add_node(v);
  w.add_node("s");
  w.add_node("s'");
  w.add_node("t");
  for (const auto& e : g.edges()) {
    w.add_edge(g.nodes()[e.from], g.nodes()[e.to], e.delay, e.id);
  }
  for (std::size_t i = 0; i < phi.num_vars; ++i) {
    w.add_edge("s", "s_" + var_name(i), mx, zero_edge("s", "s_" + var_name(i)));
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const std::string c = "s_c" + std::to_string(j + 1);
    w.add_edge("s", c, mx, zero_edge("s", c));
  }
  w.add_edge("s", "s1", mx, zero_edge("s", "s1"));
  w.add_edge("s", "s2", mx, zero_edge("s", "s2"));
  w.add_edge("s", "s'", mx, zero_edge("s", "s'"));
  w.add_edge("s'", "s2", DelayFunction::constant(Rational(0)),
             zero_edge("s'", "s2"));
  w.add_edge("s", "s0", DelayFunction::constant(wall), zero_edge("s", "s0"));
  w.add_edge("t0", "t", DelayFunction::constant(wall), zero_edge("t0", "t"));
  w.add_edge("t'", "t", mx, zero_edge("t'", "t"));
  for (const auto& p : g.players()) w.add_player("s", "t", p.beta, p.id);
  return w;
}

void PartitionInstance::validate() const {
  if (values.empty()) throw ValidationError("partition instance is empty");
  for (auto v : values) {
    if (v <= 0) throw ValidationError("partition values must be positive");
  }
  if (total() % 2 != 0) throw ValidationError("partition values must sum to an even number");
}

std::int64_t PartitionInstance::total() const {
  std::int64_t sum = 0;
  for (auto v : values) sum += v;
  return sum;
}

bool PartitionInstance::has_equal_split() const {
  const std::int64_t half = total() / 2;
  if (total() % 2 != 0) return false;
  std::vector<bool> reach(static_cast<std::size_t>(half) + 1, false);
  reach[0] = true;
  for (auto v : values) {
    for (std::int64_t s = half; s >= v; --s) {
      if (reach[static_cast<std::size_t>(s - v)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach[static_cast<std::size_t>(half)];
}

PartitionInstance parse_partition(std::istream& in) {
  PartitionInstance inst;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (*end != '\0') throw ValidationError("bad partition value '" + tok + "'");
    inst.values.push_back(v);
  }
  inst.validate();
  return inst;
}

PartitionNetwork partition_to_network(const PartitionInstance& inst) {
  inst.validate();
  PartitionNetwork out;
  NetworkGame& g = out.net;
  const std::size_t k = inst.values.size();
  for (std::size_t i = 0; i <= k; ++i) g.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) {
    const std::string from = "v" + std::to_string(i);
    const std::string to = "v" + std::to_string(i + 1);
    const Rational a(inst.values[i]);
    g.add_edge(from, to, DelayFunction::linear(Rational(2) * a),
               "hi" + std::to_string(i + 1));
    g.add_edge(from, to, DelayFunction::linear(a), "lo" + std::to_string(i + 1));
    out.optimal_congestion["hi" + std::to_string(i + 1)] = 1;
    out.optimal_congestion["lo" + std::to_string(i + 1)] = 1;
  }
  const Rational total(inst.total());
  g.add_edge("v0", "v" + std::to_string(k),
             DelayFunction::linear(Rational(3, 4) * total), "f");
  out.optimal_congestion["f"] = 1;
  for (int p = 1; p <= 3; ++p) {
    g.add_player("v0", "v" + std::to_string(k), Rational(0),
                 "p" + std::to_string(p));
  }
  out.optimal_cost = Rational(15, 4) * total;
  return out;
}

}  // namespace altruist
