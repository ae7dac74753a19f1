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

#ifndef ALTRUIST_ERRORS_HPP_
#define ALTRUIST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace altruist {

// Malformed input: bad JSON, out-of-range indices, decreasing delay tables,
// table probes past the defined congestion range.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The algorithm does not apply to this game (asymmetric input to the
// singleton DP, a potential kind whose preconditions fail, ...).
class UnsupportedGameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search or path expansion would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is well formed but has no solution (no perfect matching,
// infeasible VCG pivot).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace altruist

#endif  // ALTRUIST_ERRORS_HPP_
