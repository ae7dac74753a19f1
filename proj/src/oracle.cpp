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

#include "altruist/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

// C(s + k - 1, k): multisets of size k over s items.
std::uint64_t multisets(std::uint64_t s, std::uint64_t k) {
  if (s == 0) return k == 0 ? 1 : 0;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (s - 1 + i) / i;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

void nondecreasing(std::size_t k, std::size_t s, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  const std::size_t from = cur.empty() ? 0 : cur.back();
  for (std::size_t x = from; x < s; ++x) {
    cur.push_back(x);
    nondecreasing(k, s, cur, out);
    cur.pop_back();
  }
}

// Groups of agents whose choices are enumerated together; the index is
// mixed radix with the first group most significant.
class StateSpace {
 public:
  StateSpace(const Game& game, bool canonical, std::uint64_t budget)
      : n_(game.num_agents()) {
    const bool merge = canonical && game.is_symmetric();
    size_ = 1;
    if (merge) {
      const std::size_t s = n_ == 0 ? 0 : game.agent(0).strategies.size();
      groups_.resize(game.levels().size());
      for (std::size_t i = 0; i < n_; ++i) {
        groups_[game.level_of(i)].agents.push_back(i);
      }
      for (auto& g : groups_) {
        g.strategies = s;
        size_ = mul_sat(size_, multisets(s, g.agents.size()));
      }
    } else {
      for (std::size_t i = 0; i < n_; ++i) {
        Group g;
        g.agents = {i};
        g.strategies = game.agent(i).strategies.size();
        size_ = mul_sat(size_, g.strategies);
        groups_.push_back(std::move(g));
      }
    }
    if (size_ > budget) {
      throw BudgetExceededError(
          "state enumeration needs " +
          (size_ == kSaturated ? std::string("more than 2^64")
                               : std::to_string(size_)) +
          " states; budget is " + std::to_string(budget));
    }
    for (auto& g : groups_) {
      std::vector<std::size_t> cur;
      nondecreasing(g.agents.size(), g.strategies, cur, g.tuples);
    }
  }

  std::uint64_t size() const { return size_; }

  void decode(std::uint64_t idx, State& out) const {
    out.choice.resize(n_);
    for (std::size_t k = groups_.size(); k-- > 0;) {
      const auto& g = groups_[k];
      const std::uint64_t radix = g.tuples.size();
      const auto& tuple = g.tuples[idx % radix];
      idx /= radix;
      for (std::size_t a = 0; a < g.agents.size(); ++a) {
        out.choice[g.agents[a]] = tuple[a];
      }
    }
  }

 private:
  struct Group {
    std::vector<std::size_t> agents;
    std::size_t strategies = 0;
    std::vector<std::vector<std::size_t>> tuples;
  };
  std::size_t n_;
  std::vector<Group> groups_;
  std::uint64_t size_ = 1;
};

struct Extreme {
  Rational cost;
  std::uint64_t index = 0;
};

struct ScanResult {
  std::vector<std::uint64_t> hits;
  std::optional<Extreme> lo;
  std::optional<Extreme> hi;
  std::uint64_t visited = 0;
};

void absorb(ScanResult& into, ScanResult&& part) {
  into.hits.insert(into.hits.end(), part.hits.begin(), part.hits.end());
  into.visited += part.visited;
  // Parts arrive in index order, so strict comparisons keep the earliest.
  if (part.lo && (!into.lo || part.lo->cost < into.lo->cost)) {
    into.lo = std::move(part.lo);
  }
  if (part.hi && (!into.hi || into.hi->cost < part.hi->cost)) {
    into.hi = std::move(part.hi);
  }
}

// Visits every state, records those accepted by `pred` and the cheapest and
// dearest among them. With `first_only`, stops once any state is accepted.
template <class Pred>
ScanResult scan(const Game& game, const StateSpace& space, bool parallel,
                bool first_only, bool keep_hits, Pred pred) {
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t total = space.size();
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<ScanResult> parts(chunks);
  std::atomic<bool> found{false};

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    if (first_only && found.load(std::memory_order_relaxed)) continue;
    ScanResult& part = parts[static_cast<std::size_t>(c)];
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    State state;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      space.decode(idx, state);
      const CongestionVector loads = congestions(game, state);
      ++part.visited;
      if (!pred(state, loads)) continue;
      if (keep_hits) part.hits.push_back(idx);
      Rational cost = social_cost(game, loads);
      if (!part.lo || cost < part.lo->cost) part.lo = Extreme{cost, idx};
      if (!part.hi || part.hi->cost < cost) part.hi = Extreme{cost, idx};
      if (first_only) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }

  ScanResult out;
  for (auto& p : parts) absorb(out, std::move(p));
  return out;
}

CostedState costed(const StateSpace& space, const Extreme& e) {
  CostedState out;
  space.decode(e.index, out.state);
  out.cost = e.cost;
  return out;
}

}  // namespace

std::uint64_t state_space_size(const Game& game) {
  std::uint64_t size = 1;
  for (const auto& a : game.agents()) size = mul_sat(size, a.strategies.size());
  return size;
}

std::uint64_t oracle_work(const Game& game, const OracleOptions& options) {
  if (!options.canonical_symmetric || !game.is_symmetric()) {
    return state_space_size(game);
  }
  std::vector<std::uint64_t> per_level(game.levels().size(), 0);
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    ++per_level[game.level_of(i)];
  }
  const std::uint64_t s =
      game.num_agents() == 0 ? 0 : game.agent(0).strategies.size();
  std::uint64_t size = 1;
  for (auto k : per_level) size = mul_sat(size, multisets(s, k));
  return size;
}

NashEnumeration enumerate_nash(const Game& game, const OracleOptions& options) {
  const StateSpace space(game, options.canonical_symmetric, options.budget);
  auto res = scan(game, space, options.parallel, false, true,
                  [&](const State& s, const CongestionVector& loads) {
                    return is_nash(game, s, loads).is_nash;
                  });
  NashEnumeration out;
  out.state_count = state_space_size(game);
  out.visited = res.visited;
  for (auto idx : res.hits) {
    State s;
    space.decode(idx, s);
    out.equilibria.push_back(std::move(s));
  }
  if (res.lo) out.best = costed(space, *res.lo);
  if (res.hi) out.worst = costed(space, *res.hi);
  return out;
}

bool has_nash(const Game& game, const OracleOptions& options) {
  const StateSpace space(game, options.canonical_symmetric, options.budget);
  const auto res = scan(game, space, options.parallel, true, false,
                        [&](const State& s, const CongestionVector& loads) {
                          return is_nash(game, s, loads).is_nash;
                        });
  return res.lo.has_value();
}

CostedState brute_force_optimum(const Game& game,
                                const OracleOptions& options) {
  const StateSpace space(game, options.canonical_symmetric, options.budget);
  const auto res = scan(game, space, options.parallel, false, false,
                        [](const State&, const CongestionVector&) {
                          return true;
                        });
  return costed(space, *res.lo);
}

std::vector<State> local_optima(const Game& game,
                                const OracleOptions& options) {
  const StateSpace space(game, options.canonical_symmetric, options.budget);
  auto res = scan(
      game, space, options.parallel, false, true,
      [&](const State& s, const CongestionVector&) {
        for (std::size_t i = 0; i < game.num_agents(); ++i) {
          for (std::size_t k = 0; k < game.agent(i).strategies.size(); ++k) {
            if (k == s.choice[i]) continue;
            if (move_delta(game, s, i, k).delta_social.sign() > 0) return false;
          }
        }
        return true;
      });
  std::vector<State> out;
  for (auto idx : res.hits) {
    State s;
    space.decode(idx, s);
    out.push_back(std::move(s));
  }
  return out;
}

bool nash_with_congestions_exists(const Game& game,
                                  const CongestionVector& target,
                                  const OracleOptions& options) {
  const StateSpace space(game, options.canonical_symmetric, options.budget);
  const auto res = scan(game, space, options.parallel, true, false,
                        [&](const State& s, const CongestionVector& loads) {
                          return loads == target &&
                                 is_nash(game, s, loads).is_nash;
                        });
  return res.lo.has_value();
}

std::optional<std::vector<std::size_t>> min_altruist_subset_bruteforce(
    const Game& game, const CongestionVector& target,
    const OracleOptions& options) {
  const std::size_t n = game.num_agents();
  if (n >= 63) throw BudgetExceededError("too many agents for subset search");
  // Altruism levels change per subset, so agents are never merged here.
  const StateSpace space(game, false, options.budget);
  const auto matching = scan(game, space, options.parallel, false, true,
                             [&](const State&, const CongestionVector& loads) {
                               return loads == target;
                             });
  std::vector<State> candidates;
  for (auto idx : matching.hits) {
    State s;
    space.decode(idx, s);
    candidates.push_back(std::move(s));
  }
  if (candidates.empty()) return std::nullopt;
  if (mul_sat(candidates.size(), std::uint64_t{1} << n) > options.budget) {
    throw BudgetExceededError("subset search exceeds the state budget");
  }

  for (std::size_t k = 0; k <= n; ++k) {
    // Subsets of size k in lexicographic order of their index lists.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k),
              true);
    do {
      std::vector<Rational> betas(n, Rational(0));
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) {
          betas[i] = Rational(1);
          members.push_back(i);
        }
      }
      const Game trial = game.with_betas(betas);
      for (const auto& s : candidates) {
        if (is_nash(trial, s, target).is_nash) return members;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace altruist
