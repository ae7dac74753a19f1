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

#include "altruist/cli.hpp"

#include <omp.h>

#include <fstream>
#include <functional>
#include <random>

#include "CLI11.hpp"
#include "altruist/dynamics.hpp"
#include "altruist/errors.hpp"
#include "altruist/game_io.hpp"
#include "altruist/generators.hpp"
#include "altruist/oracle.hpp"
#include "altruist/singleton_dp.hpp"
#include "altruist/stabilization.hpp"

namespace altruist {
namespace {

constexpr std::size_t kListedEquilibria = 1000;

struct Options {
  std::string game;
  std::string target;
  std::string costs;
  std::string policy = "round_robin";
  std::string start;
  std::string trajectory;
  std::string formula;
  std::string partition;
  std::string kind;
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1'000'000;
  std::size_t path_cap = 100'000;
  std::size_t max_levels = 4;
  int workers = 0;
  bool require_ne = false;
  bool symmetric = false;
  bool random_start = false;
};

// Domain-level "no" answers that still produce a JSON document.
struct Outcome {
  Json body;
  int code = kExitOk;
};

Game load(const Options& o) {
  return load_game(read_json_file(o.game), o.path_cap);
}

Json state_json(const Game& game, const State& state) {
  Json j = Json::object();
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    Json ids = Json::array();
    for (auto r : game.agent(i).strategies[state.choice[i]]) {
      ids.push_back(game.resource(r).id);
    }
    j[game.agent(i).id] = std::move(ids);
  }
  return j;
}

Json levels_json(const Game& game) {
  Json j = Json::array();
  for (const auto& b : game.levels()) j.push_back(rational_to_json(b));
  return j;
}

// counts[resource id] = agents per altruism level.
Json counts_json(const Game& game, const State& state) {
  Json j = Json::object();
  std::vector<std::vector<int>> counts(
      game.num_resources(), std::vector<int>(game.levels().size(), 0));
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    for (auto r : game.agent(i).strategies[state.choice[i]]) {
      ++counts[r][game.level_of(i)];
    }
  }
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    j[game.resource(r).id] = counts[r];
  }
  return j;
}

Json costed_json(const Game& game, const State& state, const Rational& cost) {
  return {{"cost", rational_to_json(cost)},
          {"counts", counts_json(game, state)},
          {"congestion", congestion_to_json(game, congestions(game, state))},
          {"state", state_json(game, state)}};
}

Json bound_json(const std::optional<Rational>& v) {
  return v ? rational_to_json(*v) : Json(nullptr);
}

Outcome cmd_validate(const Options& o) {
  const Game g = load(o);
  Json j;
  j["valid"] = true;
  j["agents"] = g.num_agents();
  j["resources"] = g.num_resources();
  j["singleton"] = g.is_singleton();
  j["symmetric"] = g.is_symmetric();
  j["levels"] = levels_json(g);
  j["state_space"] = std::to_string(state_space_size(g));
  return {j};
}

Outcome cmd_solve(const Options& o) {
  const Game g = load(o);
  SolveOptions opts;
  opts.max_levels = o.max_levels;
  const auto report = solve_symmetric_singleton(g, opts);
  Json j;
  j["exists"] = report.exists;
  j["levels"] = levels_json(g);
  j["gate_combinations"] = report.gate_combinations;
  j["dp_runs"] = report.dp_runs;
  j["best"] = nullptr;
  j["worst"] = nullptr;
  j["witness_bounds"] = nullptr;
  if (report.exists) {
    j["best"] = costed_json(g, report.best->state, report.best->cost);
    j["worst"] = costed_json(g, report.worst->state, report.worst->cost);
    Json bounds = Json::array();
    for (const auto& b : *report.witness_bounds) {
      Json e = {{"d_max", bound_json(b.d_max)},
                {"d_min_plus", bound_json(b.d_min_plus)},
                {"pivot", nullptr}};
      if (b.pivot) {
        e["pivot"] = {{"resource", g.resource(b.pivot->resource).id},
                      {"congestion", b.pivot->congestion}};
      }
      bounds.push_back(std::move(e));
    }
    j["witness_bounds"] = std::move(bounds);
  }
  return {j, (o.require_ne && !report.exists) ? kExitInfeasible : kExitOk};
}

State read_start(const Game& g, const Options& o) {
  State s;
  if (!o.start.empty()) {
    const Json j = read_json_file(o.start);
    if (!j.is_array()) {
      throw ValidationError("start state must be an array of strategy indices");
    }
    for (const auto& x : j) {
      if (!x.is_number_unsigned()) {
        throw ValidationError("strategy index must be a non-negative integer");
      }
      s.choice.push_back(x.get<std::size_t>());
    }
    validate_state(g, s);
    return s;
  }
  std::mt19937_64 rng(o.seed);
  for (const auto& a : g.agents()) {
    if (!o.random_start) {
      s.choice.push_back(0);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, a.strategies.size() - 1);
    s.choice.push_back(pick(rng));
  }
  return s;
}

Outcome cmd_dynamics(const Options& o) {
  const Game g = load(o);
  const State start = read_start(g, o);
  DynamicsOptions opts;
  opts.max_steps = o.max_steps;
  opts.record_trajectory = !o.trajectory.empty();
  const auto report =
      run_dynamics(g, start, Policy::parse(o.policy, o.seed), opts);
  if (!o.trajectory.empty()) {
    std::ofstream f(o.trajectory);
    if (!f) throw ValidationError("cannot write '" + o.trajectory + "'");
    write_trajectory(f, g, report);
  }
  Json j;
  j["converged"] = report.converged;
  j["cycle_detected"] = report.cycle_detected;
  j["steps"] = report.steps;
  j["policy"] = o.policy;
  j["seed"] = o.seed;
  j["potential"] = report.potential_kind
                       ? Json(report.potential_kind->name())
                       : Json(nullptr);
  j["final"] = costed_json(g, report.final_state,
                           social_cost(g, report.final_state));
  j["is_nash"] = is_nash(g, report.final_state).is_nash;
  return {j};
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  opts.budget = o.budget;
  return opts;
}

Outcome cmd_oracle(const Options& o) {
  const Game g = load(o);
  const auto e = enumerate_nash(g, oracle_options(o));
  Json j;
  j["exists"] = e.best.has_value();
  j["levels"] = levels_json(g);
  j["state_count"] = std::to_string(e.state_count);
  j["visited"] = e.visited;
  j["equilibria_count"] = e.equilibria.size();
  j["equilibria"] = Json::array();
  for (std::size_t k = 0; k < e.equilibria.size() && k < kListedEquilibria;
       ++k) {
    j["equilibria"].push_back(state_json(g, e.equilibria[k]));
  }
  j["best"] = nullptr;
  j["worst"] = nullptr;
  if (e.best) j["best"] = costed_json(g, e.best->state, e.best->cost);
  if (e.worst) j["worst"] = costed_json(g, e.worst->state, e.worst->cost);
  return {j, (o.require_ne && !e.best) ? kExitInfeasible : kExitOk};
}

Outcome cmd_optimum(const Options& o) {
  const Game g = load(o);
  Json j;
  if (g.is_symmetric() && g.is_singleton() &&
      g.levels().size() <= o.max_levels) {
    SolveOptions opts;
    opts.max_levels = o.max_levels;
    const auto opt = social_optimum_symmetric(g, opts);
    j = costed_json(g, opt.state, opt.cost);
    j["method"] = "dp";
  } else {
    const auto opt = brute_force_optimum(g, oracle_options(o));
    j = costed_json(g, opt.state, opt.cost);
    j["method"] = "oracle";
  }
  return {j};
}

Outcome cmd_thresholds(const Options& o) {
  const Game g = load(o);
  SolveOptions opts;
  opts.max_levels = o.max_levels;
  const auto t = thresholds(g, opts);
  Json j;
  j["optimum"] = rational_to_json(t.optimum);
  j["n1_plus"] = t.n1_plus ? Json(*t.n1_plus) : Json(nullptr);
  j["n1_minus"] = t.n1_minus ? Json(*t.n1_minus) : Json(nullptr);
  j["by_count"] = Json::array();
  for (std::size_t k = 0; k < t.by_count.size(); ++k) {
    const auto& row = t.by_count[k];
    j["by_count"].push_back(
        {{"altruists", k},
         {"exists", row.has_value()},
         {"best", row ? rational_to_json(row->first) : Json(nullptr)},
         {"worst", row ? rational_to_json(row->second) : Json(nullptr)}});
  }
  return {j};
}

Json unwrap(const Json& j, const char* key) {
  return j.is_object() && j.contains(key) ? j.at(key) : j;
}

CongestionVector read_target(const Game& g, const Options& o) {
  if (o.target.empty()) throw ValidationError("--target is required");
  return congestion_from_json(g, unwrap(read_json_file(o.target), "target"));
}

StabilityCosts read_costs(const Game& g, const Options& o) {
  const Json j = unwrap(read_json_file(o.costs), "costs");
  if (!j.is_object()) throw ValidationError("costs must be an object");
  StabilityCosts costs(g.num_agents(),
                       std::vector<std::optional<Rational>>(g.num_resources()));
  for (const auto& [agent, row] : j.items()) {
    if (!row.is_object()) {
      throw ValidationError("costs of '" + agent + "' must be an object");
    }
    const std::size_t i = g.agent_index(agent);
    for (const auto& [res, value] : row.items()) {
      costs[i][g.resource_index(res)] = rational_from_json(value);
    }
  }
  return costs;
}

Json allocation_json(const Game& g, const std::vector<std::size_t>& res_of) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    j[g.agent(i).id] = g.resource(res_of[i]).id;
  }
  return j;
}

Outcome cmd_stabilize(const Options& o) {
  const Game g = load(o);
  const CongestionVector target = read_target(g, o);
  Json j;
  if (o.costs.empty()) {
    const auto set = min_altruist_set(g, target);
    j["feasible"] = set.has_value();
    j["mode"] = "altruists";
    if (!set) return {j, kExitInfeasible};
    j["altruists"] = Json::array();
    for (auto i : set->altruists) j["altruists"].push_back(g.agent(i).id);
    j["allocation"] = allocation_json(g, set->resource_of);
    j["total"] = std::to_string(set->altruists.size());
    return {j};
  }
  const auto alloc = min_stability_cost_allocation(g, target, read_costs(g, o));
  j["feasible"] = true;
  j["mode"] = "stability_cost";
  j["altruists"] = Json::array();
  j["allocation"] = allocation_json(g, alloc.resource_of);
  j["total"] = rational_to_json(alloc.total);
  return {j};
}

Outcome cmd_vcg(const Options& o) {
  const Game g = load(o);
  const CongestionVector target = read_target(g, o);
  if (o.costs.empty()) throw ValidationError("--costs is required");
  const StabilityCosts costs = read_costs(g, o);
  const auto out = vcg_mechanism(g, target, costs);
  Json j;
  j["allocation"] = allocation_json(g, out.allocation.resource_of);
  j["total"] = rational_to_json(out.allocation.total);
  j["payments"] = Json::object();
  j["utilities"] = Json::object();
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    j["payments"][g.agent(i).id] = rational_to_json(out.payments[i]);
    j["utilities"][g.agent(i).id] =
        rational_to_json(vcg_utility(out, costs, i));
  }
  return {j};
}

CnfFormula read_formula(const Options& o) {
  if (o.formula.empty()) throw ValidationError("--formula is required");
  std::ifstream in(o.formula);
  if (!in) throw ValidationError("cannot open '" + o.formula + "'");
  return parse_cnf(in);
}

Outcome cmd_generate(const Options& o) {
  if (o.kind == "example1") return {game_to_json(example1())};
  if (o.kind == "footnote-sym") return {game_to_json(footnote_symmetric())};
  if (o.kind == "footnote-asym") return {game_to_json(footnote_asymmetric())};
  if (o.kind == "sat-singleton") {
    return {game_to_json(sat_to_singleton(read_formula(o)))};
  }
  if (o.kind == "sat-network") {
    const CnfFormula phi = read_formula(o);
    Json j = network_to_json(sat_to_network(phi, o.symmetric));
    j["meta"] = {{"symmetric", o.symmetric}};
    if (o.symmetric) {
      j["meta"]["M"] = rational_to_json(sat_network_big_m(phi));
    }
    return {j};
  }
  if (o.kind == "partition") {
    if (o.partition.empty()) throw ValidationError("--partition is required");
    std::ifstream in(o.partition);
    if (!in) throw ValidationError("cannot open '" + o.partition + "'");
    const auto net = partition_to_network(parse_partition(in));
    Json j = network_to_json(net.net);
    j["meta"] = {{"optimal_congestion", net.optimal_congestion},
                 {"optimal_cost", rational_to_json(net.optimal_cost)}};
    return {j};
  }
  throw ValidationError("unknown generator '" + o.kind + "'");
}

Json error_json(const char* kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& log) {
  Options o;
  CLI::App app{"Congestion games with altruistic agents"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--workers", o.workers,
                 "Threads for parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", o.budget, "State budget for exhaustive search");
  app.add_option("--path-cap", o.path_cap,
                 "Maximum simple paths per player when expanding networks");
  app.add_option("--max-levels", o.max_levels,
                 "Maximum altruism levels accepted by the DP");

  std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers;
  auto command = [&](const char* name, const char* help,
                     std::function<Outcome(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(fn);
    return sub;
  };
  auto with_game = [&](CLI::App* sub) {
    sub->add_option("--game", o.game, "Game or network JSON file")->required();
    return sub;
  };

  with_game(command("validate", "Load and validate a game", cmd_validate));
  with_game(command("solve", "Best and worst equilibria of a symmetric "
                    "singleton game", cmd_solve))
      ->add_flag("--require-ne", o.require_ne,
                 "Exit with 1 when no equilibrium exists");
  auto* dyn = with_game(command("dynamics", "Run better-response dynamics",
                                cmd_dynamics));
  dyn->add_option("--policy", o.policy, "round_robin, random or max_gain")
      ->check(CLI::IsMember({"round_robin", "random", "max_gain"}));
  dyn->add_option("--seed", o.seed, "Seed for random choices");
  dyn->add_option("--max-steps", o.max_steps, "Step limit");
  dyn->add_option("--start", o.start, "JSON array of strategy indices");
  dyn->add_flag("--random-start", o.random_start,
                "Draw the start state from --seed");
  dyn->add_option("--trajectory", o.trajectory, "Write moves to this file");
  with_game(command("oracle", "Enumerate all pure equilibria", cmd_oracle))
      ->add_flag("--require-ne", o.require_ne,
                 "Exit with 1 when no equilibrium exists");
  with_game(command("optimum", "Minimum social cost", cmd_optimum));
  with_game(command("thresholds", "Optimal stability and anarchy thresholds",
                    cmd_thresholds));
  auto* stab = with_game(command(
      "stabilize", "Fewest altruists, or cheapest assignment, for a target",
      cmd_stabilize));
  stab->add_option("--target", o.target, "Target congestion JSON")->required();
  stab->add_option("--costs", o.costs, "Stability cost JSON");
  auto* vcg = with_game(command("vcg", "VCG mechanism for stability costs",
                                cmd_vcg));
  vcg->add_option("--target", o.target, "Target congestion JSON")->required();
  vcg->add_option("--costs", o.costs, "Stability cost JSON")->required();
  auto* gen = command("generate", "Emit a named game or reduction instance",
                      cmd_generate);
  gen->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"example1", "footnote-sym", "footnote-asym",
                             "sat-singleton", "sat-network", "partition"}));
  gen->add_option("--formula", o.formula, "DIMACS-like CNF file");
  gen->add_option("--partition", o.partition, "File of positive integers");
  gen->add_flag("--symmetric", o.symmetric,
                "Wrap the network into a single-commodity game");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    log << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    log << "error: " << e.what() << '\n';
    out << error_json("usage", e.what()).dump(2) << '\n';
    return kExitInvalid;
  }

  if (o.workers > 0) omp_set_num_threads(o.workers);

  try {
    for (auto& [sub, fn] : handlers) {
      if (!sub->parsed()) continue;
      const Outcome result = fn(o);
      out << result.body.dump(2) << '\n';
      return result.code;
    }
  } catch (const BudgetExceededError& e) {
    log << "budget: " << e.what() << '\n';
    out << error_json("budget", e.what()).dump(2) << '\n';
    return kExitBudget;
  } catch (const InfeasibleError& e) {
    log << "infeasible: " << e.what() << '\n';
    out << error_json("infeasible", e.what()).dump(2) << '\n';
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    log << "invalid input: " << e.what() << '\n';
    out << error_json("validation", e.what()).dump(2) << '\n';
    return kExitInvalid;
  } catch (const UnsupportedGameError& e) {
    log << "unsupported: " << e.what() << '\n';
    out << error_json("unsupported", e.what()).dump(2) << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    log << "invalid input: " << e.what() << '\n';
    out << error_json("validation", e.what()).dump(2) << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace altruist
