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

#include "altruist/matching.hpp"

#include <stdexcept>

#include "altruist/errors.hpp"

namespace altruist {
namespace {

// Forbidden pairs become a weight no feasible assignment can reach.
Rational big_m(const WeightMatrix& weight) {
  Rational m(1);
  for (const auto& row : weight) {
    std::optional<Rational> top;
    for (const auto& w : row) {
      if (w && (!top || *top < *w)) top = *w;
    }
    if (top) m += *top;
  }
  return m;
}

}  // namespace

std::optional<Assignment> min_cost_assignment(const WeightMatrix& weight) {
  const std::size_t n = weight.size();
  if (n == 0) return Assignment{};
  const std::size_t m = weight.front().size();
  for (const auto& row : weight) {
    if (row.size() != m) throw ValidationError("ragged weight matrix");
    bool any = false;
    for (const auto& w : row) {
      if (!w) continue;
      if (w->sign() < 0) throw ValidationError("negative assignment weight");
      any = true;
    }
    if (!any) return std::nullopt;
  }
  if (n > m) return std::nullopt;

  const Rational M = big_m(weight);
  auto a = [&](std::size_t i, std::size_t j) -> const Rational& {
    const auto& w = weight[i - 1][j - 1];
    return w ? *w : M;
  };

  // 1-based; column 0 is the virtual root of each search tree.
  std::vector<Rational> u(n + 1), v(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(m + 1);
    std::vector<bool> seen(m + 1, false);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Rational cur = a(i0, j) - u[i0] - v[j];
        if (!seen[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          seen[j] = true;
          way[j] = j0;
        }
        if (!delta || minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.column_of.assign(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) out.column_of[p[j] - 1] = j - 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = weight[i][out.column_of[i]];
    if (!w) return std::nullopt;
    out.total += *w;
  }
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

bool audit_duals(const WeightMatrix& weight, const Assignment& a) {
  const std::size_t n = weight.size();
  if (n == 0) return true;
  const std::size_t m = weight.front().size();
  if (a.u.size() != n || a.v.size() != m || a.column_of.size() != n) {
    return false;
  }
  const Rational M = big_m(weight);
  std::vector<bool> matched(m, false);
  Rational primal;
  Rational dual;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& w = weight[i][j] ? *weight[i][j] : M;
      if (w < a.u[i] + a.v[j]) return false;
    }
    const std::size_t j = a.column_of[i];
    if (matched[j] || !weight[i][j]) return false;
    matched[j] = true;
    if (a.u[i] + a.v[j] != *weight[i][j]) return false;
    primal += *weight[i][j];
    dual += a.u[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (a.v[j].sign() > 0) return false;
    if (!matched[j] && !a.v[j].is_zero()) return false;
    dual += a.v[j];
  }
  return primal == a.total && primal == dual;
}

std::optional<Assignment> min_cost_assignment_lex(
    const WeightMatrix& weight, const std::vector<std::size_t>& row_order,
    const std::vector<std::size_t>& column_order) {
  auto best = min_cost_assignment(weight);
  if (!best || weight.empty()) return best;
  const Rational optimum = best->total;
  const std::size_t m = weight.front().size();

  WeightMatrix fixed = weight;
  std::vector<bool> taken(m, false);
  for (auto r : row_order) {
    bool placed = false;
    for (auto c : column_order) {
      if (taken[c] || !fixed[r][c]) continue;
      WeightMatrix trial = fixed;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != c) trial[r][j].reset();
      }
      for (std::size_t i = 0; i < trial.size(); ++i) {
        if (i != r) trial[i][c].reset();
      }
      const auto got = min_cost_assignment(trial);
      if (got && got->total == optimum) {
        fixed = std::move(trial);
        taken[c] = true;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::logic_error("lexicographic refinement lost the optimum");
    }
  }
  auto refined = min_cost_assignment(fixed);
  // Any optimal dual certifies every optimal primal.
  refined->u = std::move(best->u);
  refined->v = std::move(best->v);
  return refined;
}

}  // namespace altruist
