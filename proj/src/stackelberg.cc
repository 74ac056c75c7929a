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

#include "stackgpa/stackelberg.h"

#include <optional>
#include <stdexcept>
#include <utility>

namespace stackgpa {

ThreatResult Threat(const BimatrixGame& game) {
  // Variables: x_0..x_{rows-1} >= 0, then v free. Maximize -v.
  const int rows = game.rows();
  LinearProgram lp;
  lp.objective.assign(rows + 1, Rational(0));
  lp.objective[rows] = Rational(-1);
  lp.lower_bounds.assign(rows + 1, Rational(0));
  lp.lower_bounds[rows] = std::nullopt;
  for (int j = 0; j < game.cols(); ++j) {
    std::vector<Rational> row(rows + 1);
    for (int i = 0; i < rows; ++i) row[i] = -game.FollowerPayoff(i, j);
    row[rows] = Rational(1);
    lp.AddAtLeast(std::move(row), Rational(0));
  }
  std::vector<Rational> simplex_row(rows + 1, Rational(1));
  simplex_row[rows] = Rational(0);
  lp.AddEquality(std::move(simplex_row), Rational(1));

  LPSolution sol = SimplexSolve(lp);
  if (sol.status != LPStatus::kOptimal) {
    throw std::logic_error("threat LP is always feasible and bounded");
  }
  std::vector<Rational> x(sol.values.begin(), sol.values.begin() + rows);
  ThreatResult out{sol.values[rows], MixedStrategy(std::move(x))};
  return out;
}

Rational FollowerBestReplyValue(const BimatrixGame& game,
                                const MixedStrategy& leader) {
  std::optional<Rational> best;
  for (int j = 0; j < game.cols(); ++j) {
    Rational v;
    for (int i = 0; i < game.rows(); ++i) {
      if (!leader[i].IsZero()) v += leader[i] * game.FollowerPayoff(i, j);
    }
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

LinearProgram BuildStackelbergLp(const BimatrixGame& game,
                                 const Rational& threat_value) {
  const int k = game.num_pairs();
  LinearProgram lp;
  lp.objective.resize(k);
  std::vector<Rational> follower_row(k);
  for (int p = 0; p < k; ++p) {
    lp.objective[p] = game.LeaderPayoff(game.PairAt(p));
    follower_row[p] = game.FollowerPayoff(game.PairAt(p));
  }
  lp.AddAtLeast(std::move(follower_row), threat_value);
  lp.AddEquality(std::vector<Rational>(k, Rational(1)), Rational(1));
  return lp;
}

StackelbergLpResult StackelbergLp(const BimatrixGame& game) {
  StackelbergLpResult out{{}, {}, Threat(game)};
  LPSolution sol = SimplexSolve(BuildStackelbergLp(game, out.threat.value));
  if (sol.status != LPStatus::kOptimal) {
    // The threat strategy's induced distribution is always feasible.
    throw std::logic_error("Stackelberg LP is always feasible and bounded");
  }
  out.alpha = std::move(sol.values);
  out.opt = std::move(sol.objective_value);
  return out;
}

FollowerOptimum MaxFollowerPair(const BimatrixGame& game) {
  FollowerOptimum best{{0, 0}, game.FollowerPayoff(0, 0)};
  for (int k = 1; k < game.num_pairs(); ++k) {
    ActionPair p = game.PairAt(k);
    const Rational& f = game.FollowerPayoff(p);
    if (f > best.value ||
        (f == best.value &&
         game.LeaderPayoff(p) > game.LeaderPayoff(best.pair))) {
      best = {p, f};
    }
  }
  return best;
}

}  // namespace stackgpa
