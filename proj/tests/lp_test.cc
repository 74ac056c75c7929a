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

#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "stackgpa/lp.h"
#include "stackgpa/stackelberg.h"
#include "test_util.h"

namespace stackgpa {
namespace {

using testing::MakeGame;
using testing::Q;

std::vector<Rational> Row(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Q(v));
  return out;
}

TEST_CASE("simplex small cases") {
  LinearProgram lp;
  lp.objective = Row({"1"});
  lp.AddAtMost(Row({"1"}), Q("1"));
  LPSolution s = SimplexSolve(lp);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.values[0] == 1);
  CHECK(s.objective_value == 1);

  LinearProgram bad;
  bad.objective = Row({"1"});
  bad.AddAtLeast(Row({"1"}), Q("2"));
  bad.AddAtMost(Row({"1"}), Q("1"));
  CHECK(SimplexSolve(bad).status == LPStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.objective = Row({"1", "-1"});
  unbounded.AddAtLeast(Row({"1", "-1"}), Q("0"));
  CHECK(SimplexSolve(unbounded).status == LPStatus::kUnbounded);

  // Free variable with a negative optimum.
  LinearProgram free_var;
  free_var.objective = Row({"-1"});
  free_var.lower_bounds = {std::nullopt};
  free_var.AddAtLeast(Row({"1"}), Q("-7/3"));
  s = SimplexSolve(free_var);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.values[0] == Q("-7/3"));

  // Nonzero lower bound.
  LinearProgram shifted;
  shifted.objective = Row({"-1", "-1"});
  shifted.lower_bounds = {Q("1/2"), Q("-1")};
  s = SimplexSolve(shifted);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.objective_value == Q("1/2"));
}

TEST_CASE("simplex terminates on degenerate cycling examples") {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LinearProgram beale;
  beale.objective = Row({"3/4", "-20", "1/2", "-6"});
  beale.AddAtMost(Row({"1/4", "-8", "-1", "9"}), Q("0"));
  beale.AddAtMost(Row({"1/2", "-12", "-1/2", "3"}), Q("0"));
  beale.AddAtMost(Row({"0", "0", "1", "0"}), Q("1"));
  LPSolution s = SimplexSolve(beale);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.objective_value == Q("5/4"));
  CHECK(IsFeasible(beale, s.values));

  // Kuhn's degenerate example; optimum 2.
  LinearProgram kuhn;
  kuhn.objective = Row({"2", "3", "-1", "-12"});
  kuhn.AddAtMost(Row({"-2", "-9", "1", "9"}), Q("0"));
  kuhn.AddAtMost(Row({"1/3", "1", "-1/3", "-2"}), Q("0"));
  kuhn.AddAtMost(Row({"2", "3", "-1", "-12"}), Q("2"));
  s = SimplexSolve(kuhn);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.objective_value == Q("2"));

  // Redundant equalities leave an artificial in the basis after phase 1.
  LinearProgram redundant;
  redundant.objective = Row({"1", "2"});
  redundant.AddEquality(Row({"1", "1"}), Q("1"));
  redundant.AddEquality(Row({"2", "2"}), Q("2"));
  s = SimplexSolve(redundant);
  REQUIRE(s.status == LPStatus::kOptimal);
  CHECK(s.objective_value == 2);
}

TEST_CASE("threat examples") {
  ThreatResult pd = Threat(testing::PrisonersDilemma());
  CHECK(pd.value == Q("1/5"));
  CHECK(pd.strategy == MixedStrategy::Pure(2, 1));

  ThreatResult inev = Threat(testing::InevitabilityGame());
  CHECK(inev.value == 0);
  CHECK(inev.strategy == MixedStrategy::Pure(2, 1));

  const BimatrixGame constant =
      MakeGame({{"1", "0"}, {"0", "1"}}, {{"2/7", "2/7"}, {"2/7", "2/7"}});
  CHECK(Threat(constant).value == Q("2/7"));

  // Matching pennies: the threat must mix.
  ThreatResult mp = Threat(testing::MatchingPennies());
  CHECK(mp.value == 0);
  CHECK(mp.strategy == MixedStrategy::Uniform(2));
}

// Follower's maximin LP on M2, the dual of the threat LP.
Rational DualValue(const BimatrixGame& g) {
  LinearProgram lp;
  const int c = g.cols();
  lp.objective.assign(c + 1, Rational(0));
  lp.objective[c] = 1;
  lp.lower_bounds.assign(c + 1, Rational(0));
  lp.lower_bounds[c] = std::nullopt;
  for (int i = 0; i < g.rows(); ++i) {
    std::vector<Rational> row(c + 1);
    for (int j = 0; j < c; ++j) row[j] = g.FollowerPayoff(i, j);
    row[c] = -1;
    lp.AddAtLeast(std::move(row), 0);
  }
  std::vector<Rational> ones(c + 1, Rational(1));
  ones[c] = 0;
  lp.AddEquality(std::move(ones), 1);
  LPSolution s = SimplexSolve(lp);
  REQUIRE(s.status == LPStatus::kOptimal);
  return s.objective_value;
}

TEST_CASE("threat value equals the dual value and is attained") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const BimatrixGame g =
        testing::RandomGame(rng, 1 + trial % 4, 1 + (trial / 4) % 4);
    const ThreatResult t = Threat(g);
    REQUIRE(FollowerBestReplyValue(g, t.strategy) == t.value);
    REQUIRE(DualValue(g) == t.value);
  }
}

TEST_CASE("stackelberg lp examples") {
  const BimatrixGame pd = testing::PrisonersDilemma();
  const StackelbergLpResult lp = StackelbergLp(pd);
  CHECK(lp.opt == Q("13/15"));
  CHECK(lp.Weight(pd, {0, 0}) == Q("1/3"));
  CHECK(lp.Weight(pd, {0, 1}) == 0);
  CHECK(lp.Weight(pd, {1, 0}) == Q("2/3"));
  CHECK(lp.Weight(pd, {1, 1}) == 0);

  const BimatrixGame inev = testing::InevitabilityGame();
  const StackelbergLpResult li = StackelbergLp(inev);
  CHECK(li.opt == 1);
  CHECK(li.Weight(inev, {0, 0}) == 1);

  const BimatrixGame zero = MakeGame({{"0", "0"}}, {{"0", "0"}});
  CHECK(StackelbergLp(zero).opt == 0);

  const BimatrixGame single = MakeGame({{"-2/3"}}, {{"1/2"}});
  CHECK(StackelbergLp(single).opt == Q("-2/3"));
}

TEST_CASE("stackelberg lp solutions are feasible and locally optimal") {
  std::mt19937_64 rng(23);
  const Rational eps(1, 97);
  for (int trial = 0; trial < 60; ++trial) {
    const BimatrixGame g =
        testing::RandomGame(rng, 1 + trial % 3, 1 + (trial / 3) % 3);
    const StackelbergLpResult lp = StackelbergLp(g);
    const LinearProgram prog = BuildStackelbergLp(g, lp.threat.value);
    REQUIRE(IsFeasible(prog, lp.alpha));
    Rational objective;
    for (int k = 0; k < g.num_pairs(); ++k) {
      objective += lp.alpha[k] * g.LeaderPayoff(g.PairAt(k));
    }
    REQUIRE(objective == lp.opt);
    // Moving a little mass between two pairs never helps while feasible.
    for (int a = 0; a < g.num_pairs(); ++a) {
      if (lp.alpha[a].IsZero()) continue;
      const Rational step = std::min(eps, lp.alpha[a]);
      for (int b = 0; b < g.num_pairs(); ++b) {
        if (a == b) continue;
        std::vector<Rational> moved = lp.alpha;
        moved[a] -= step;
        moved[b] += step;
        if (!IsFeasible(prog, moved)) continue;
        Rational value;
        for (int k = 0; k < g.num_pairs(); ++k) {
          value += moved[k] * g.LeaderPayoff(g.PairAt(k));
        }
        REQUIRE(value <= lp.opt);
      }
    }
    // The threat strategy's induced distribution is feasible, so the LP
    // value is at least the leader payoff of any such distribution.
    REQUIRE(lp.opt >= -1);
  }
}

TEST_CASE("max follower pair examples") {
  const BimatrixGame pd = testing::PrisonersDilemma();
  FollowerOptimum f = MaxFollowerPair(pd);
  CHECK(f.pair == ActionPair{0, 1});
  CHECK(f.value == 1);

  const BimatrixGame constant =
      MakeGame({{"0", "1/2"}, {"1", "1"}}, {{"1/3", "1/3"}, {"1/3", "1/3"}});
  f = MaxFollowerPair(constant);
  CHECK(f.value == Q("1/3"));
  CHECK(f.pair == ActionPair{1, 0});  // ties on M1: first lexicographically

  f = MaxFollowerPair(testing::InevitabilityGame());
  CHECK(f.pair == ActionPair{0, 1});
  CHECK(f.value == 1);
}

}  // namespace
}  // namespace stackgpa
