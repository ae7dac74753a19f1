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

// Exhaustive search over pure states of small games.
//
// Symmetric games are enumerated as one multiset of strategies per altruism
// level (agents of a level are interchangeable there); all other games walk
// the full product of strategy lists. Work is split into contiguous index
// ranges; results are merged in index order, so they do not depend on the
// number of threads.

#ifndef ALTRUIST_ORACLE_HPP_
#define ALTRUIST_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "altruist/game.hpp"

namespace altruist {

struct OracleOptions {
  // Refuse (BudgetExceededError) when more states would be visited.
  std::uint64_t budget = 2'000'000;
  bool parallel = true;
  bool canonical_symmetric = true;
};

struct CostedState {
  State state;
  Rational cost;
};

struct NashEnumeration {
  std::vector<State> equilibria;  // canonical representatives, index order
  std::optional<CostedState> best;
  std::optional<CostedState> worst;
  std::uint64_t state_count = 0;  // product of strategy-list sizes
  std::uint64_t visited = 0;      // states actually examined
};

// Product of strategy-list sizes, saturating at UINT64_MAX.
std::uint64_t state_space_size(const Game& game);

// Number of states the oracle would examine under `options`.
std::uint64_t oracle_work(const Game& game, const OracleOptions& options = {});

NashEnumeration enumerate_nash(const Game& game,
                               const OracleOptions& options = {});

bool has_nash(const Game& game, const OracleOptions& options = {});

CostedState brute_force_optimum(const Game& game,
                                const OracleOptions& options = {});

// States where no single agent can lower the social cost by moving.
std::vector<State> local_optima(const Game& game,
                                const OracleOptions& options = {});

bool nash_with_congestions_exists(const Game& game,
                                  const CongestionVector& target,
                                  const OracleOptions& options = {});

// Smallest agent set T (ties: lexicographically smallest index list) such
// that making T pure altruists and everyone else pure egoists admits an
// equilibrium with exactly `target` congestions.
std::optional<std::vector<std::size_t>> min_altruist_subset_bruteforce(
    const Game& game, const CongestionVector& target,
    const OracleOptions& options = {});

}  // namespace altruist

#endif  // ALTRUIST_ORACLE_HPP_
