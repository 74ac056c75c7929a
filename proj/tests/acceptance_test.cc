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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.
// Exit status is nonzero only for failures outside the documented list of
// known deviations (see README).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stackgpa/gpa.h"
#include "stackgpa/hardness.h"
#include "stackgpa/oracle.h"
#include "stackgpa/stackelberg.h"
#include "test_util.h"

namespace stackgpa {
namespace {

using testing::Q;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string Str(const Rational& r) { return r.ToString(); }

// Criteria whose failure is documented and expected.
const std::set<int> kKnownDeviations = {1};

Outcome PdGoldenRun() {
  Outcome o;
  const BimatrixGame pd = testing::PrisonersDilemma();
  const StackelbergLpResult lp = StackelbergLp(pd);
  o.Require(lp.threat.value == Q("1/5"), "V = " + Str(lp.threat.value));
  std::vector<Rational> alpha(pd.rows() * pd.cols());
  alpha[pd.IndexOf({0, 0})] = Q("1/3");
  alpha[pd.IndexOf({1, 0})] = Q("2/3");
  o.Require(lp.alpha == alpha, "alpha mismatch");
  o.Require(lp.opt == Q("13/15"), "OPT_LP = " + Str(lp.opt));

  const DeterministicConstruction c = BuildDeterministicGpa(pd, 11);
  std::vector<ActionPair> want;
  for (int k = 0; k < 6; ++k) want.push_back({1, 0});
  for (int k = 0; k < 3; ++k) want.push_back({0, 0});
  for (int k = 0; k < 2; ++k) want.push_back({0, 1});
  o.Require(c.gpa->prescription() == want, "prescription mismatch");

  const BestResponseResult br = BestResponse(*c.gpa, pd, 11);
  const Rational avg = br.leader_value / Rational(11);
  const Rational gap = lp.opt - avg;
  o.Require(avg == Q("8/11"),
            "leader average " + Str(avg) + " != 8/11 (M1(1,2) = 0 in the "
            "stated matrix)");
  o.Require(gap == Q("23/165"), "gap " + Str(gap) + " != 23/165");
  return o;
}

Outcome Inevitability() {
  Outcome o;
  const BimatrixGame g = testing::InevitabilityGame();
  const StackelbergLpResult lp = StackelbergLp(g);
  o.Require(lp.opt == Rational(1), "OPT_LP = " + Str(lp.opt));
  for (int t : {2, 4, 8}) {
    const auto gpa = BuildDeterministicGpa(g, t).gpa;
    const BestResponseResult br = BestResponse(*gpa, g, t);
    const Rational avg = br.leader_value / Rational(t);
    o.Require(avg == Rational(1) - Rational(1, t),
              "T=" + std::to_string(t) + " average " + Str(avg));
    o.Require(lp.opt - avg == Rational(1, t),
              "T=" + std::to_string(t) + " gap " + Str(lp.opt - avg));
  }
  return o;
}

Outcome Separation() {
  Outcome o;
  const BimatrixGame pd = testing::PrisonersDilemma();
  const GrimTriggerGpa grim({0, 0}, 1);
  for (int t : {3, 5, 7}) {
    const std::string tag = "T=" + std::to_string(t);
    const BestResponseResult br = BestResponse(grim, pd, t);
    const LookupTableGpa follower(PlayerSide::kFollower, br.follower_policy);
    const Transcript tr = Simulate(grim, follower, pd, t, 0);
    std::vector<ActionPair> want(t - 1, ActionPair{0, 0});
    want.push_back({0, 1});
    o.Require(tr.pairs == want, tag + " transcript mismatch");
    const Rational total = Rational(3 * (t - 1), 5);
    o.Require(br.leader_value == total,
              tag + " leader total " + Str(br.leader_value));
    o.Require(total > Rational(t, 5), tag + " not above T/5");
  }
  return o;
}

Outcome DeterministicRate() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  int checked = 0;
  for (int game = 0; game < 50; ++game) {
    const int n = game % 2 == 0 ? 2 : 3;
    const BimatrixGame g = testing::RandomGame(rng, n, n, 6);
    const StackelbergLpResult lp = StackelbergLp(g);
    const BigInt cycle = DenominatorLcm(lp.alpha);
    for (int t = 1; t <= 60; ++t) {
      if (BigInt(t) <= cycle) continue;
      const DeterministicConstruction c = BuildDeterministicGpa(g, t);
      const AveragePayoff avg = AveragePayoffs(g, c.gpa->prescription());
      const Rational bound =
          lp.opt - Rational(BigInt(2) * cycle, BigInt(t));
      const std::string tag =
          "game " + std::to_string(game) + " T=" + std::to_string(t);
      o.Require(avg.leader >= bound, tag + " below OPT - 2N/T");
      o.Require(VerifyPrescription(*c.gpa, g).obeys, tag + " not obeyed");
      ++checked;
    }
  }
  o.Require(checked > 0, "no feasible horizons");
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  std::mt19937_64 rng(777);
  const std::vector<std::pair<int, int>> shapes = {
      {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}, {1, 4}, {4, 1}};
  for (int game = 0; game < 20; ++game) {
    auto [rows, cols] = shapes[game % shapes.size()];
    const BimatrixGame g = testing::RandomGame(rng, rows, cols);
    std::vector<std::pair<std::shared_ptr<const GamePlayingAlgorithm>, int>>
        cases;
    // Deterministic leaders up to T = 5.
    cases.emplace_back(
        std::make_shared<GrimTriggerGpa>(ActionPair{0, 0}, rows - 1), 5);
    cases.emplace_back(std::make_shared<TwoPhaseGpa>(
                           ActionPair{rows - 1, cols - 1}, 0, 2),
                       5);
    for (int t = 2; t <= 5; ++t) {
      cases.emplace_back(BuildSampledGpa(g, t, game).gpa, t);
    }
    // Randomized leaders up to T = 3.
    cases.emplace_back(std::make_shared<ConstantGpa>(
                           PlayerSide::kLeader,
                           testing::RandomStrategy(rng, rows)),
                       3);
    cases.emplace_back(std::make_shared<MultiplicativeWeightsGpa>(
                           PlayerSide::kLeader, Q("1/2")),
                       3);
    for (const auto& [leader, t] : cases) {
      const BestResponseResult br = BestResponse(*leader, g, t);
      testing::BruteForceFollower brute(*leader, g, t);
      const auto best = brute.Best();
      const std::string tag = "game " + std::to_string(game) + " " +
                              leader->kind() + " T=" + std::to_string(t);
      o.Require(br.follower_value == best.follower, tag + " follower value");
      o.Require(br.leader_value == best.leader, tag + " leader value");
    }
  }
  return o;
}

Outcome SampledRate() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::vector<BimatrixGame> games = {
      testing::PrisonersDilemma(), testing::InevitabilityGame(),
      testing::GeneralSumGame(), testing::RandomGame(rng, 3, 3, 6),
      testing::RandomGame(rng, 2, 3, 6)};
  int runs = 0, within = 0;
  for (size_t k = 0; k < games.size(); ++k) {
    const BimatrixGame& g = games[k];
    const StackelbergLpResult lp = StackelbergLp(g);
    const Rational a(g.granularity());
    for (int t : {17, 257}) {
      for (uint64_t seed = 0; seed < 100; ++seed) {
        const auto c = BuildSampledGpa(g, t, seed);
        const auto& p = c.gpa->prescription();
        const AveragePayoff head = AveragePayoffs(
            g, std::vector<ActionPair>(p.begin(), p.end() - 1));
        o.Require(head.follower >= lp.threat.value,
                  "game " + std::to_string(k) + " seed " +
                      std::to_string(seed) + " follower average below V");
        const Rational d = lp.opt - AveragePayoffs(g, p).leader;
        // d <= 4 sqrt(10A) / T^(1/4), raised to the fourth power.
        if (d <= Rational(0) ||
            Pow(d, 4) * Rational(t) <= Rational(25600) * a * a) {
          ++within;
        }
        ++runs;
      }
    }
  }
  o.Require(within * 100 >= runs * 95,
            std::to_string(within) + "/" + std::to_string(runs) +
                " within the bound");
  return o;
}

Outcome ZeroSumNoRegret() {
  Outcome o;
  std::mt19937_64 rng(4242);
  const std::vector<BimatrixGame> games = {
      testing::MatchingPennies(), testing::RandomGame(rng, 3, 3, 6, true)};
  const int t = 1000;
  for (size_t k = 0; k < games.size(); ++k) {
    const BimatrixGame& g = games[k];
    const Rational v = -Threat(g).value;
    auto leader = std::make_shared<MultiplicativeWeightsGpa>(
        PlayerSide::kLeader, Q("1/20"));
    const MyopicFollowerGpa follower(leader);
    const Transcript tr = Simulate(*leader, follower, g, t, 99 + k);
    const AveragePayoff avg = AveragePayoffs(g, tr);
    const RegretReport r = ExternalRegret(g, tr.pairs, PlayerSide::kLeader);
    o.Require(avg.leader >= v - r.total_regret / Rational(t),
              "game " + std::to_string(k) + " average " + Str(avg.leader) +
                  " below v - regret/T");
  }
  return o;
}

Outcome GeneralSum() {
  Outcome o;
  const BimatrixGame g = testing::GeneralSumGame();
  const int t = 16;
  for (int row : {0, 1}) {
    const ConstantGpa leader(PlayerSide::kLeader, MixedStrategy::Pure(2, row));
    const BestResponseResult br = BestResponse(leader, g, t);
    const LookupTableGpa follower(PlayerSide::kFollower, br.follower_policy);
    const Transcript tr = Simulate(leader, follower, g, t, 0);
    const RegretReport r = ExternalRegret(g, tr.pairs, PlayerSide::kLeader);
    const Rational avg = br.leader_value / Rational(t);
    const Rational per_round = r.total_regret / Rational(t);
    if (row == 0) {
      o.Require(r.total_regret <= Rational(0), "row 1 regret positive");
      o.Require(avg == Q("1/4"), "row 1 average " + Str(avg));
    } else {
      o.Require(avg == Q("1/2"), "row 2 average " + Str(avg));
      o.Require(per_round == Q("1/4"), "row 2 regret " + Str(per_round));
      o.Require(per_round >= Q("1/64"), "row 2 regret below 1/64");
    }
  }
  return o;
}

Outcome Hardness() {
  Outcome o;
  const Graph c4 = CycleGraph(4);
  const ThreePlayerGame g4 = ReduceGraph(c4);
  const auto cover = BalancedVertexCover(c4);
  o.Require(cover.has_value(), "4-cycle has no balanced cover");
  if (cover) {
    const auto [p1, p2] = CoverStrategies(c4, *cover);
    const Player3AuditResult a = Player3Audit(g4, p1, p2);
    o.Require(a.best_value == Rational(1), "cover audit " + Str(a.best_value));
    o.Require(a.best_action == g4.null_action(), "witness is not t_0");
  }

  const Graph k4 = CompleteGraph(4);
  o.Require(!BalancedVertexCover(k4).has_value(), "K4 has a balanced cover");
  const GridAuditResult grid = GridAuditPlayer3(ReduceGraph(k4), 8);
  const Rational threshold = Player3Threshold(4, 5);
  o.Require(grid.worst_case > threshold,
            "K4 worst case " + Str(grid.worst_case) + " <= " +
                Str(threshold));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace stackgpa

int main() {
  using namespace stackgpa;
  const std::vector<Criterion> criteria = {
      {1, "PD golden run", 1, PdGoldenRun},
      {2, "inevitability", 5, Inevitability},
      {3, "separation", 10, Separation},
      {4, "deterministic rate", 60, DeterministicRate},
      {5, "oracle equivalence", 120, OracleEquivalence},
      {6, "sampled construction", 120, SampledRate},
      {7, "zero-sum no-regret", 30, ZeroSumNoRegret},
      {8, "general-sum counterexample", 5, GeneralSum},
      {9, "hardness reduction", 120, Hardness},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    o.Require(secs < c.limit_seconds, "runtime over limit");
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + " criterion " +
                       std::to_string(c.id) + " (" + c.name + ") " +
                       time.str() + "s";
    if (!o.pass) {
      line += ": " + o.detail;
      if (kKnownDeviations.count(c.id)) {
        line += " [known deviation]";
      } else {
        ++unexpected;
      }
    }
    std::printf("%s\n", line.c_str());
  }
  return unexpected == 0 ? 0 : 1;
}
