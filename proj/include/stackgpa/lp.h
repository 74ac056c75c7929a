// Copyright 2026 The stackgpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STACKGPA_LP_H_
#define STACKGPA_LP_H_

#include <optional>
#include <vector>

#include "stackgpa/game.h"
#include "stackgpa/rational.h"

namespace stackgpa {

// maximize objective . x
// subject to  eq_lhs x  = eq_rhs
//             ge_lhs x >= ge_rhs
//             x_k >= lower_bounds[k]   (nullopt: free; empty vector: all 0)
struct LinearProgram {
  std::vector<Rational> objective;
  RationalMatrix eq_lhs;
  std::vector<Rational> eq_rhs;
  RationalMatrix ge_lhs;
  std::vector<Rational> ge_rhs;
  std::vector<std::optional<Rational>> lower_bounds;

  int num_variables() const { return static_cast<int>(objective.size()); }

  // Convenience builders; row length must equal num_variables().
  void AddEquality(std::vector<Rational> row, Rational rhs);
  void AddAtLeast(std::vector<Rational> row, Rational rhs);
  void AddAtMost(std::vector<Rational> row, const Rational& rhs);
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

const char* LPStatusName(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective_value;
};

// Two-phase primal simplex over exact rationals with Bland's smallest-index
// rule, so it terminates on degenerate problems and always returns the same
// vertex for the same input. Throws kInvalidArgument on inconsistent
// dimensions.
LPSolution SimplexSolve(const LinearProgram& lp);

// Exact feasibility check of a point (used by tests and by callers that want
// to assert the solver's output).
bool IsFeasible(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace stackgpa

#endif  // STACKGPA_LP_H_
