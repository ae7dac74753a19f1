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

#include "altruist/dynamics.hpp"

#include <stdexcept>
#include <unordered_set>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

Rational rosenthal(const Game& game, const CongestionVector& loads) {
  Rational phi;
  for (std::size_t r = 0; r < game.num_resources(); ++r) {
    for (int x = 1; x <= loads.load[r]; ++x) phi += game.delay(r, x);
  }
  return phi;
}

struct ChoiceHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::string PotentialKind::name() const {
  switch (tag) {
    case Tag::kRosenthal:
      return "rosenthal";
    case Tag::kBetaUniform:
      return "beta_uniform";
    case Tag::kLinearWeighted:
      return "linear_weighted";
  }
  return "unknown";
}

Rational potential(const Game& game, const State& state,
                   const PotentialKind& kind) {
  const auto loads = congestions(game, state);
  switch (kind.tag) {
    case PotentialKind::Tag::kRosenthal:
      return rosenthal(game, loads);
    case PotentialKind::Tag::kBetaUniform: {
      for (const auto& a : game.agents()) {
        if (a.beta != kind.beta) {
          throw UnsupportedGameError(
              "beta-uniform potential needs every agent at level " +
              kind.beta.to_string() + "; agent '" + a.id + "' has " +
              a.beta.to_string());
        }
      }
      return (Rational(1) - kind.beta) * rosenthal(game, loads) +
             kind.beta * social_cost(game, loads);
    }
    case PotentialKind::Tag::kLinearWeighted: {
      std::vector<Rational> slope;
      slope.reserve(game.num_resources());
      for (const auto& r : game.resources()) {
        const auto* lin = std::get_if<DelayFunction::Linear>(&r.delay.form());
        if (lin == nullptr) {
          throw UnsupportedGameError(
              "linear-weighted potential needs d(x) = a x on every resource; "
              "resource '" + r.id + "' is not of kind linear");
        }
        slope.push_back(lin->a);
      }
      Rational phi;
      for (std::size_t r = 0; r < game.num_resources(); ++r) {
        const std::int64_t n = loads.load[r];
        // sum_{j=1}^{n} a j + a n^2
        phi += slope[r] * Rational(n * (n + 1), 2) + slope[r] * Rational(n * n);
      }
      for (std::size_t i = 0; i < game.num_agents(); ++i) {
        const Rational& beta = game.agent(i).beta;
        const Rational weight =
            (Rational(2) * beta - Rational(1)) / (beta + Rational(1));
        for (auto r : game.agent(i).strategies[state.choice[i]]) {
          phi -= weight * slope[r];
        }
      }
      return phi;
    }
  }
  throw std::logic_error("unhandled potential kind");
}

std::optional<PotentialKind> applicable_potential(const Game& game) {
  if (game.levels().size() <= 1) {
    const Rational beta =
        game.levels().empty() ? Rational(0) : game.levels().front();
    if (beta.is_zero()) return PotentialKind::rosenthal();
    return PotentialKind::beta_uniform(beta);
  }
  for (const auto& r : game.resources()) {
    if (r.delay.kind() != DelayKind::kLinear) return std::nullopt;
  }
  return PotentialKind::linear_weighted();
}

Policy Policy::parse(const std::string& name, std::uint64_t seed) {
  if (name == "round_robin") return round_robin();
  if (name == "random") return random(seed);
  if (name == "max_gain") return max_gain();
  throw ValidationError("unknown policy '" + name +
                        "' (expected round_robin, random or max_gain)");
}

std::string Policy::name() const {
  switch (kind) {
    case Kind::kRoundRobin:
      return "round_robin";
    case Kind::kRandom:
      return "random";
    case Kind::kMaxGain:
      return "max_gain";
  }
  return "unknown";
}

MoveSelector::MoveSelector(const Game& game, Policy policy)
    : game_(game), policy_(policy), rng_(policy.seed) {}

std::optional<Move> MoveSelector::next(const State& state,
                                       const CongestionVector& loads) {
  const std::size_t n = game_.num_agents();
  auto best_response = [&](std::size_t i) -> std::optional<Move> {
    std::optional<Move> best;
    const auto& strategies = game_.agent(i).strategies;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      if (s == state.choice[i]) continue;
      Rational gain = cost_decrease(game_, loads, i, state.choice[i], s);
      if (gain.sign() > 0 && (!best || best->gain < gain)) {
        best = Move{i, s, std::move(gain)};
      }
    }
    return best;
  };

  switch (policy_.kind) {
    case Policy::Kind::kRoundRobin: {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (cursor_ + k) % n;
        if (auto m = best_response(i)) {
          cursor_ = (i + 1) % n;
          return m;
        }
      }
      return std::nullopt;
    }
    case Policy::Kind::kMaxGain: {
      std::optional<Move> best;
      for (std::size_t i = 0; i < n; ++i) {
        auto m = best_response(i);
        if (m && (!best || best->gain < m->gain)) best = std::move(m);
      }
      return best;
    }
    case Policy::Kind::kRandom: {
      std::vector<Move> moves;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& strategies = game_.agent(i).strategies;
        for (std::size_t s = 0; s < strategies.size(); ++s) {
          if (s == state.choice[i]) continue;
          Rational gain = cost_decrease(game_, loads, i, state.choice[i], s);
          if (gain.sign() > 0) moves.push_back(Move{i, s, std::move(gain)});
        }
      }
      if (moves.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      return moves[pick(rng_)];
    }
  }
  return std::nullopt;
}

std::optional<Move> find_improving_move(const Game& game, const State& state,
                                        const Policy& policy) {
  MoveSelector selector(game, policy);
  return selector.next(state, congestions(game, state));
}

DynamicsReport run_dynamics(const Game& game, const State& start,
                            const Policy& policy,
                            const DynamicsOptions& options) {
  validate_state(game, start);
  DynamicsReport report;
  report.final_state = start;
  report.potential_kind = applicable_potential(game);

  State& state = report.final_state;
  CongestionVector loads = congestions(game, state);
  MoveSelector selector(game, policy);

  bool hashing = options.detect_cycles;
  std::unordered_set<std::vector<std::size_t>, ChoiceHash> visited;
  if (hashing) visited.insert(state.choice);

  const bool track_potential =
      report.potential_kind &&
      (options.verify_potential || options.record_trajectory);
  std::optional<Rational> phi;
  if (track_potential) phi = potential(game, state, *report.potential_kind);

  while (true) {
    auto move = selector.next(state, loads);
    if (!move) {
      report.converged = true;
      break;
    }
    if (report.steps == options.max_steps) break;

    TrajectoryStep step;
    if (options.record_trajectory) {
      step.step = report.steps + 1;
      step.agent = move->agent;
      step.from = state.choice[move->agent];
      step.to = move->strategy;
      step.cost_before = individual_cost(game, state, move->agent);
    }

    const auto& strategies = game.agent(move->agent).strategies;
    for (auto r : strategies[state.choice[move->agent]]) --loads.load[r];
    for (auto r : strategies[move->strategy]) ++loads.load[r];
    state.choice[move->agent] = move->strategy;
    ++report.steps;

    if (track_potential) {
      Rational next = potential(game, state, *report.potential_kind);
      if (options.verify_potential && !(next < *phi)) {
        throw std::logic_error("potential " + report.potential_kind->name() +
                               " did not decrease at step " +
                               std::to_string(report.steps));
      }
      phi = std::move(next);
    }
    if (options.record_trajectory) {
      step.cost_after = individual_cost(game, state, move->agent);
      step.potential = phi;
      report.trajectory.push_back(std::move(step));
    }

    if (hashing) {
      if (!visited.insert(state.choice).second) {
        report.cycle_detected = true;
        break;
      }
      if (visited.size() > options.state_budget) {
        hashing = false;
        visited.clear();
      }
    }
  }
  return report;
}

void write_trajectory(std::ostream& os, const Game& game,
                      const DynamicsReport& report) {
  for (const auto& s : report.trajectory) {
    os << s.step << ' ' << game.agent(s.agent).id << ' ' << s.from
       << "→" << s.to << ' ' << s.cost_before << ' ' << s.cost_after << ' '
       << (s.potential ? s.potential->to_string() : std::string("-")) << '\n';
  }
}

}  // namespace altruist
