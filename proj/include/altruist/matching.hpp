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

// Exact min-cost assignment of rows to distinct columns (rows <= columns),
// by successive shortest augmenting paths with vertex potentials.

#ifndef ALTRUIST_MATCHING_HPP_
#define ALTRUIST_MATCHING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "altruist/rational.hpp"

namespace altruist {

// weight[i][j]; nullopt marks a forbidden pair. Weights must be >= 0.
using WeightMatrix = std::vector<std::vector<std::optional<Rational>>>;

struct Assignment {
  std::vector<std::size_t> column_of;  // per row
  Rational total;
  // Dual certificate: u[i] + v[j] <= w[i][j] on allowed pairs, equality on
  // matched ones, v[j] <= 0 and v[j] = 0 on unmatched columns.
  std::vector<Rational> u;
  std::vector<Rational> v;
};

// Min-cost assignment saturating every row, or nullopt when none exists.
std::optional<Assignment> min_cost_assignment(const WeightMatrix& weight);

// Checks the dual certificate of `a` against the weights.
bool audit_duals(const WeightMatrix& weight, const Assignment& a);

// Among min-cost assignments, the one that is lexicographically smallest
// when rows are visited in `row_order` and each row takes the earliest
// column of `column_order` that keeps the optimum.
std::optional<Assignment> min_cost_assignment_lex(
    const WeightMatrix& weight, const std::vector<std::size_t>& row_order,
    const std::vector<std::size_t>& column_order);

}  // namespace altruist

#endif  // ALTRUIST_MATCHING_HPP_
