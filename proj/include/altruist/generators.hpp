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

// Named small games and the hardness gadgets (3SAT to singleton and network
// games, Partition to series-parallel networks) as concrete instances.

#ifndef ALTRUIST_GENERATORS_HPP_
#define ALTRUIST_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "altruist/game.hpp"
#include "altruist/network.hpp"

namespace altruist {

struct Literal {
  std::size_t var = 0;  // 0-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  // Clauses have 1..3 literals over known variables; every variable occurs
  // at most twice positively and at most twice negatively.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
  bool satisfiable() const;  // truth table
};

// "p cnf <vars> <clauses>" header optional; "c" lines are comments; each
// clause is a line of non-zero signed variable numbers, optionally ended by 0.
CnfFormula parse_cnf(std::istream& in);

Game example1();
Game footnote_symmetric();
Game footnote_asymmetric();
// "example1", "footnote_symmetric", "footnote_asymmetric".
std::map<std::string, Game> canned_games();

// Resources e1_x<i>, e0_x<i> (9x) per variable, e0 (7x + 3), e1 and e2
// (4, 8, then 9). Agents X<i>, C<j>, u1..u3 egoists, u0 pure altruist.
Game sat_to_singleton(const CnfFormula& phi);

// The network game G_phi, or with `symmetric` the single-commodity
// wrapper s -> t around it.
NetworkGame sat_to_network(const CnfFormula& phi, bool symmetric);

// 1 + sum over edges of G_phi of the delay at congestion n + m + 4, rounded
// up to an integer.
Rational sat_network_big_m(const CnfFormula& phi);

struct PartitionInstance {
  std::vector<std::int64_t> values;

  // Positive values with an even sum.
  void validate() const;
  std::int64_t total() const;
  bool has_equal_split() const;
};

// Whitespace separated positive integers.
PartitionInstance parse_partition(std::istream& in);

struct PartitionNetwork {
  NetworkGame net;
  std::map<std::string, int> optimal_congestion;  // per edge id
  Rational optimal_cost;                          // 15/4 of the value sum
};

// Nodes v0..vk; for value a_i edges hi<i> (2 a_i x) and lo<i> (a_i x) from
// v<i-1> to v<i>; edge f (3/4 a x) from v0 to vk; three egoists v0 -> vk.
PartitionNetwork partition_to_network(const PartitionInstance& inst);

}  // namespace altruist

#endif  // ALTRUIST_GENERATORS_HPP_
