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

#include "altruist/singleton_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "altruist/errors.hpp"

namespace altruist {

PerceivedDelays perceived_delays(const DelayFunction& d, const Rational& beta,
                                 int n) {
  if (n < 0) throw ValidationError("negative congestion");
  const Rational selfish = Rational(1) - beta;
  auto p = [&](int x) { return selfish * d(x) + beta * altruistic_delay(d, x); };
  return {n == 0 ? Rational(0) : p(n), p(n + 1)};
}

bool admissible(const LevelBounds& bounds) {
  for (const auto& b : bounds) {
    if (b.pivot) continue;
    if (b.d_max && b.d_min_plus && *b.d_min_plus < *b.d_max) return false;
  }
  return true;
}

struct SingletonSolver::Candidate {
  bool pivot = false;
  int occ_gate = 0;  // rank; hosting the level needs rank(occupy) <= occ_gate
  int ent_gate = 0;  // rank; every resource needs rank(enter) >= ent_gate
  std::size_t pivot_j = 0;
  int pivot_t = 0;
};

struct SingletonSolver::DpResult {
  bool feasible = false;
  Rational lo;
  Rational hi;
  std::vector<std::vector<int>> lo_counts;  // [j][l]
  std::vector<std::vector<int>> hi_counts;
};

SingletonSolver::SingletonSolver(const Game& game, SolveOptions options)
    : game_(game), options_(options) {
  if (!game.is_symmetric() || !game.is_singleton()) {
    throw UnsupportedGameError(
        "the equilibrium DP needs a symmetric singleton game");
  }
  if (game.num_agents() == 0) {
    throw UnsupportedGameError("the equilibrium DP needs at least one agent");
  }
  const std::size_t L = game.levels().size();
  if (L > options_.max_levels) {
    throw UnsupportedGameError(
        "game has " + std::to_string(L) + " altruism levels; the DP is "
        "configured for at most " + std::to_string(options_.max_levels));
  }
  n_ = static_cast<int>(game.num_agents());
  level_counts_.assign(L, 0);
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    ++level_counts_[game.level_of(i)];
  }
  for (const auto& s : game.agent(0).strategies) usable_.push_back(s.front());
  std::sort(usable_.begin(), usable_.end());

  values_.resize(L);
  rank_.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    auto& vals = values_[l];
    for (auto r : usable_) {
      for (int t = 1; t <= n_; ++t) vals.push_back(game.perceived(l, r, t));
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    rank_[l].resize(usable_.size());
    for (std::size_t j = 0; j < usable_.size(); ++j) {
      rank_[l][j].assign(n_ + 1, -1);
      for (int t = 1; t <= n_; ++t) {
        const auto& v = game.perceived(l, usable_[j], t);
        rank_[l][j][t] = static_cast<int>(
            std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
      }
    }
  }

  cost_.resize(usable_.size());
  for (std::size_t j = 0; j < usable_.size(); ++j) {
    for (int t = 0; t <= n_; ++t) {
      cost_[j].push_back(Rational(t) * game.delay(usable_[j], t));
    }
  }

  std::size_t total = 1;
  for (int c : level_counts_) total *= static_cast<std::size_t>(c + 1);
  tuples_.reserve(total);
  tuple_total_.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> k(L);
    std::size_t rest = idx;
    for (std::size_t l = L; l-- > 0;) {
      const auto radix = static_cast<std::size_t>(level_counts_[l] + 1);
      k[l] = static_cast<int>(rest % radix);
      rest /= radix;
    }
    int sum = 0;
    for (int x : k) sum += x;
    tuples_.push_back(std::move(k));
    tuple_total_.push_back(sum);
  }
}

std::vector<std::vector<int>> SingletonSolver::resource_combos(
    std::size_t r, const LevelBounds& bounds,
    const std::vector<int>& caps) const {
  const std::size_t L = game_.levels().size();
  if (bounds.size() != L || caps.size() != L) {
    throw ValidationError("bounds and caps need one entry per level");
  }
  if (!std::binary_search(usable_.begin(), usable_.end(), r)) {
    throw ValidationError("resource is not in the common strategy set");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> k(L, 0);
  while (true) {
    int t = 0;
    for (int x : k) t += x;
    bool ok = t <= n_;
    for (std::size_t l = 0; ok && l < L; ++l) {
      const auto& b = bounds[l];
      if (b.pivot && b.pivot->resource == r) {
        ok = t == b.pivot->congestion && k[l] >= 1;
        continue;
      }
      if (t < n_) {
        const auto& enter = game_.perceived(l, r, t + 1);
        if (!b.d_min_plus || enter < *b.d_min_plus) ok = false;
      }
      if (ok && k[l] >= 1) {
        const auto& occupy = game_.perceived(l, r, t);
        if (!b.d_max || *b.d_max < occupy) ok = false;
      }
    }
    if (ok) out.push_back(k);
    // Lexicographic odometer over the box [0, caps].
    std::size_t l = L;
    while (l > 0) {
      --l;
      if (k[l] < caps[l]) {
        ++k[l];
        std::fill(k.begin() + static_cast<std::ptrdiff_t>(l) + 1, k.end(), 0);
        break;
      }
      if (l == 0) return out;
    }
    if (L == 0) return out;
  }
}

std::vector<std::vector<SingletonSolver::Candidate>>
SingletonSolver::level_candidates() const {
  const std::size_t L = game_.levels().size();
  const std::size_t m = usable_.size();
  std::vector<std::vector<Candidate>> out(L);
  for (std::size_t l = 0; l < L; ++l) {
    std::vector<Candidate> raw;
    for (int T = 0; T < static_cast<int>(values_[l].size()); ++T) {
      raw.push_back(Candidate{false, T, T, 0, 0});
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (int t = 1; t < n_; ++t) {
        if (rank_[l][j][t + 1] < rank_[l][j][t]) {
          raw.push_back(
              Candidate{true, rank_[l][j][t + 1], rank_[l][j][t], j, t});
        }
      }
    }
    // Keep one candidate per distinct admissibility pattern; drop patterns
    // in which some resource can take no congestion at all.
    std::map<std::vector<unsigned char>, std::size_t> seen;
    for (const auto& c : raw) {
      std::vector<unsigned char> sig(m * (n_ + 1));
      bool viable = true;
      for (std::size_t j = 0; j < m && viable; ++j) {
        bool any = false;
        for (int t = 0; t <= n_; ++t) {
          unsigned char bits = 0;
          if (c.pivot && j == c.pivot_j) {
            if (t == c.pivot_t) bits = 2;
          } else {
            const bool enter_ok = t == n_ || rank_[l][j][t + 1] >= c.ent_gate;
            if (enter_ok) {
              bits = 1;
              if (t >= 1 && rank_[l][j][t] <= c.occ_gate) bits |= 2;
            }
          }
          sig[j * (n_ + 1) + t] = bits;
          any = any || bits != 0;
        }
        viable = any;
      }
      if (viable && seen.emplace(std::move(sig), out[l].size()).second) {
        out[l].push_back(c);
      }
    }
  }
  return out;
}

SingletonSolver::DpResult SingletonSolver::run_dp(
    const std::vector<unsigned char>& sig) const {
  const std::size_t L = game_.levels().size();
  const std::size_t m = usable_.size();
  const std::size_t S = tuples_.size();

  struct Cell {
    bool feasible = false;
    Rational lo;
    Rational hi;
  };
  std::vector<Cell> cur(S);
  cur[S - 1].feasible = true;  // nobody placed yet
  std::vector<std::vector<int>> back_lo(m, std::vector<int>(S, -1));
  std::vector<std::vector<int>> back_hi(m, std::vector<int>(S, -1));

  std::vector<std::size_t> allowed;
  for (std::size_t j = 0; j < m; ++j) {
    allowed.clear();
    for (std::size_t ci = 0; ci < S; ++ci) {
      const int t = tuple_total_[ci];
      const unsigned char* bits = &sig[(j * (n_ + 1) + t) * L];
      bool ok = true;
      for (std::size_t l = 0; l < L && ok; ++l) {
        ok = (bits[l] & (tuples_[ci][l] == 0 ? 1 : 2)) != 0;
      }
      if (ok) allowed.push_back(ci);
    }
    if (allowed.empty()) return {};

    std::vector<Cell> next(S);
    bool any = false;
    for (std::size_t rem = 0; rem < S; ++rem) {
      if (!cur[rem].feasible) continue;
      const auto& have = tuples_[rem];
      for (auto ci : allowed) {
        const auto& take = tuples_[ci];
        bool fits = true;
        for (std::size_t l = 0; l < L && fits; ++l) fits = take[l] <= have[l];
        if (!fits) continue;
        const std::size_t to = rem - ci;
        const Rational& add = cost_[j][tuple_total_[ci]];
        Cell& cell = next[to];
        Rational lo = cur[rem].lo + add;
        Rational hi = cur[rem].hi + add;
        if (!cell.feasible) {
          cell.feasible = true;
          cell.lo = std::move(lo);
          cell.hi = std::move(hi);
          back_lo[j][to] = back_hi[j][to] = static_cast<int>(ci);
          any = true;
          continue;
        }
        if (lo < cell.lo ||
            (lo == cell.lo && static_cast<int>(ci) < back_lo[j][to])) {
          cell.lo = std::move(lo);
          back_lo[j][to] = static_cast<int>(ci);
        }
        if (cell.hi < hi ||
            (hi == cell.hi && static_cast<int>(ci) < back_hi[j][to])) {
          cell.hi = std::move(hi);
          back_hi[j][to] = static_cast<int>(ci);
        }
      }
    }
    if (!any) return {};
    cur = std::move(next);
  }
  if (!cur[0].feasible) return {};

  DpResult res;
  res.feasible = true;
  res.lo = cur[0].lo;
  res.hi = cur[0].hi;
  auto trace = [&](const std::vector<std::vector<int>>& back) {
    std::vector<std::vector<int>> counts(m);
    std::size_t idx = 0;
    for (std::size_t j = m; j-- > 0;) {
      const auto ci = static_cast<std::size_t>(back[j][idx]);
      counts[j] = tuples_[ci];
      idx += ci;
    }
    return counts;
  };
  res.lo_counts = trace(back_lo);
  res.hi_counts = trace(back_hi);
  return res;
}

LevelBound SingletonSolver::to_bound(std::size_t level,
                                     const Candidate& c) const {
  LevelBound b;
  b.d_max = values_[level][static_cast<std::size_t>(c.occ_gate)];
  b.d_min_plus = values_[level][static_cast<std::size_t>(c.ent_gate)];
  if (c.pivot) b.pivot = Pivot{usable_[c.pivot_j], c.pivot_t};
  return b;
}

State SingletonSolver::state_from_counts(
    const std::vector<std::vector<int>>& counts) const {
  auto remaining = counts;
  State state;
  state.choice.resize(game_.num_agents());
  for (std::size_t i = 0; i < game_.num_agents(); ++i) {
    const std::size_t l = game_.level_of(i);
    const auto& strategies = game_.agent(i).strategies;
    bool placed = false;
    for (std::size_t r = 0; r < remaining.size() && !placed; ++r) {
      if (remaining[r][l] == 0) continue;
      for (std::size_t s = 0; s < strategies.size(); ++s) {
        if (strategies[s].front() == r) {
          state.choice[i] = s;
          --remaining[r][l];
          placed = true;
          break;
        }
      }
      if (!placed) throw ValidationError("counts use an unavailable resource");
    }
    if (!placed) throw ValidationError("counts do not cover every agent");
  }
  return state;
}

SolveReport SingletonSolver::solve() const {
  const std::size_t L = game_.levels().size();
  const std::size_t m = usable_.size();
  const auto per_level = level_candidates();

  SolveReport report;
  report.levels = game_.levels();

  std::uint64_t combos = 1;
  for (const auto& c : per_level) {
    if (c.empty()) return report;
    if (combos > std::numeric_limits<std::uint64_t>::max() / c.size()) {
      throw BudgetExceededError("too many gate combinations");
    }
    combos *= c.size();
  }
  report.dp_runs = combos;
  {
    // Raw count before merging, for diagnostics.
    std::size_t raw = 1;
    for (std::size_t l = 0; l < L; ++l) {
      std::size_t pivots = 0;
      for (std::size_t j = 0; j < m; ++j) {
        for (int t = 1; t < n_; ++t) {
          if (rank_[l][j][t + 1] < rank_[l][j][t]) ++pivots;
        }
      }
      raw *= values_[l].size() + pivots;
    }
    report.gate_combinations = raw;
  }

  auto decode = [&](std::uint64_t idx) {
    std::vector<std::size_t> pick(L);
    for (std::size_t l = L; l-- > 0;) {
      pick[l] = static_cast<std::size_t>(idx % per_level[l].size());
      idx /= per_level[l].size();
    }
    return pick;
  };
  auto signature = [&](const std::vector<std::size_t>& pick) {
    std::vector<unsigned char> sig(m * (n_ + 1) * L);
    for (std::size_t l = 0; l < L; ++l) {
      const Candidate& c = per_level[l][pick[l]];
      for (std::size_t j = 0; j < m; ++j) {
        for (int t = 0; t <= n_; ++t) {
          unsigned char bits = 0;
          if (c.pivot && j == c.pivot_j) {
            if (t == c.pivot_t) bits = 2;
          } else if (t == n_ || rank_[l][j][t + 1] >= c.ent_gate) {
            bits = 1;
            if (t >= 1 && rank_[l][j][t] <= c.occ_gate) bits |= 2;
          }
          sig[(j * (n_ + 1) + t) * L + l] = bits;
        }
      }
    }
    return sig;
  };

  struct Best {
    bool found = false;
    Rational cost;
    std::uint64_t index = 0;
    std::vector<std::vector<int>> counts;
  };
  auto better_lo = [](const Best& a, const Best& b) {  // a beats b
    if (!a.found) return false;
    if (!b.found) return true;
    return a.cost < b.cost || (a.cost == b.cost && a.index < b.index);
  };
  auto better_hi = [](const Best& a, const Best& b) {
    if (!a.found) return false;
    if (!b.found) return true;
    return b.cost < a.cost || (a.cost == b.cost && a.index < b.index);
  };

  Best lo;
  Best hi;
  const auto total = static_cast<std::int64_t>(combos);
  const bool parallel = options_.parallel;

#pragma omp parallel if (parallel)
  {
    Best local_lo;
    Best local_hi;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto u = static_cast<std::uint64_t>(idx);
      DpResult r = run_dp(signature(decode(u)));
      if (!r.feasible) continue;
      Best cand_lo{true, r.lo, u, std::move(r.lo_counts)};
      if (better_lo(cand_lo, local_lo)) local_lo = std::move(cand_lo);
      Best cand_hi{true, r.hi, u, std::move(r.hi_counts)};
      if (better_hi(cand_hi, local_hi)) local_hi = std::move(cand_hi);
    }
#pragma omp critical(altruist_dp_merge)
    {
      if (better_lo(local_lo, lo)) lo = std::move(local_lo);
      if (better_hi(local_hi, hi)) hi = std::move(local_hi);
    }
  }

  if (!lo.found) return report;

  auto expand = [&](const std::vector<std::vector<int>>& by_usable) {
    std::vector<std::vector<int>> counts(game_.num_resources(),
                                         std::vector<int>(L, 0));
    for (std::size_t j = 0; j < m; ++j) counts[usable_[j]] = by_usable[j];
    return counts;
  };
  report.exists = true;
  auto best_counts = expand(lo.counts);
  auto worst_counts = expand(hi.counts);
  report.best = Equilibrium{best_counts, lo.cost, state_from_counts(best_counts)};
  report.worst =
      Equilibrium{worst_counts, hi.cost, state_from_counts(worst_counts)};
  const auto pick = decode(lo.index);
  LevelBounds bounds;
  for (std::size_t l = 0; l < L; ++l) {
    bounds.push_back(to_bound(l, per_level[l][pick[l]]));
  }
  report.witness_bounds = std::move(bounds);
  return report;
}

SolveReport solve_symmetric_singleton(const Game& game,
                                      const SolveOptions& options) {
  return SingletonSolver(game, options).solve();
}

Optimum social_optimum_symmetric(const Game& game,
                                 const SolveOptions& options) {
  const Game altruists =
      game.with_betas(std::vector<Rational>(game.num_agents(), Rational(1)));
  const auto report = solve_symmetric_singleton(altruists, options);
  if (!report.best) {
    // A global optimum is always an all-altruist equilibrium.
    throw std::logic_error("all-altruist game reported no equilibrium");
  }
  Optimum opt;
  opt.cost = report.best->cost;
  opt.state = report.best->state;
  for (const auto& per_level : report.best->counts) {
    int sum = 0;
    for (int c : per_level) sum += c;
    opt.counts.push_back(sum);
  }
  return opt;
}

Thresholds thresholds(const Game& game, const SolveOptions& options) {
  Thresholds out;
  out.optimum = social_optimum_symmetric(game, options).cost;
  const std::size_t n = game.num_agents();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> betas(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i) betas[i] = Rational(1);
    const auto report =
        solve_symmetric_singleton(game.with_betas(betas), options);
    if (!report.exists) {
      out.by_count.emplace_back(std::nullopt);
      continue;
    }
    out.by_count.emplace_back(
        std::make_pair(report.best->cost, report.worst->cost));
    if (!out.n1_plus && report.best->cost == out.optimum) out.n1_plus = k;
    if (!out.n1_minus && report.worst->cost == out.optimum) out.n1_minus = k;
  }
  return out;
}

}  // namespace altruist
