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

#include "stackgpa/oracle.h"

#include <string>
#include <utility>
#include <vector>

#include "stackgpa/errors.h"
#include "stackgpa/random.h"
#include "stackgpa/stackelberg.h"

namespace stackgpa {
namespace {

struct Values {
  Rational follower;
  Rational leader;
};

class BackwardInduction {
 public:
  BackwardInduction(const GamePlayingAlgorithm& leader,
                    const BimatrixGame& game, int horizon, int64_t budget,
                    BestResponseResult* out)
      : leader_(leader), game_(game), horizon_(horizon), budget_(budget),
        out_(out) {}

  Values Solve() { return Visit(); }

 private:
  Values Visit() {
    if (static_cast<int>(history_.size()) == horizon_) return {};
    if (++out_->states > budget_) {
      throw Error(ErrorCode::kStateSpaceExceeded,
                  "more than " + std::to_string(budget_) +
                      " history prefixes needed (worst case " +
                      WorstCaseStates(game_, horizon_).get_str() +
                      "); reduce T or raise the budget");
    }
    const MixedStrategy x = leader_.Strategy(game_, horizon_, history_);
    if (x.size() != game_.rows()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "leader strategy size does not match the game");
    }
    int best = -1;
    Values best_values;
    for (int j = 0; j < game_.cols(); ++j) {
      Values v;
      for (int i = 0; i < game_.rows(); ++i) {
        if (x[i].IsZero()) continue;
        history_.push_back({i, j});
        Values next = Visit();
        history_.pop_back();
        v.follower += x[i] * (game_.FollowerPayoff(i, j) + next.follower);
        v.leader += x[i] * (game_.LeaderPayoff(i, j) + next.leader);
      }
      if (best < 0 || v.follower > best_values.follower ||
          (v.follower == best_values.follower &&
           v.leader > best_values.leader)) {
        best = j;
        best_values = std::move(v);
      }
    }
    out_->follower_policy.emplace(history_, best);
    return best_values;
  }

  const GamePlayingAlgorithm& leader_;
  const BimatrixGame& game_;
  const int horizon_;
  const int64_t budget_;
  BestResponseResult* out_;
  std::vector<ActionPair> history_;
};

}  // namespace

BigInt WorstCaseStates(const BimatrixGame& game, int horizon) {
  BigInt total = 0, level = 1;
  for (int t = 0; t < horizon; ++t) {
    total += level;
    level *= game.num_pairs();
  }
  return total;
}

BestResponseResult BestResponse(const GamePlayingAlgorithm& leader,
                                const BimatrixGame& game, int horizon,
                                int64_t state_budget) {
  if (horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument, "T must be >= 1");
  }
  if (leader.side() != PlayerSide::kLeader) {
    throw Error(ErrorCode::kInvalidArgument, "GPA is not a leader GPA");
  }
  if (leader.randomness() == Randomness::kCorrelated) {
    throw Error(ErrorCode::kRandomnessContractViolation,
                "leader \"" + leader.kind() +
                    "\" correlates coins across rounds");
  }
  BestResponseResult out;
  Values v =
      BackwardInduction(leader, game, horizon, state_budget, &out).Solve();
  out.follower_value = std::move(v.follower);
  out.leader_value = std::move(v.leader);
  return out;
}

std::shared_ptr<LookupTableGpa> FollowerPolicyGpa(
    const BestResponseResult& result) {
  return std::make_shared<LookupTableGpa>(PlayerSide::kFollower,
                                          result.follower_policy);
}

std::map<HistoryKey, int> OnPathPolicy(const GamePlayingAlgorithm& leader,
                                       const BimatrixGame& game, int horizon,
                                       const BestResponseResult& result) {
  std::map<HistoryKey, int> out;
  std::vector<HistoryKey> frontier = {HistoryKey{}};
  while (!frontier.empty()) {
    HistoryKey h = std::move(frontier.back());
    frontier.pop_back();
    if (static_cast<int>(h.size()) == horizon) continue;
    auto it = result.follower_policy.find(h);
    if (it == result.follower_policy.end()) {
      throw Error(ErrorCode::kMissingEntry,
                  "policy has no entry for an on-path history");
    }
    const int col = it->second;
    out.emplace(h, col);
    const MixedStrategy x = leader.Strategy(game, horizon, h);
    for (int i = 0; i < x.size(); ++i) {
      if (x[i].IsZero()) continue;
      HistoryKey next = h;
      next.push_back({i, col});
      frontier.push_back(std::move(next));
    }
  }
  return out;
}

PrescriptionVerdict VerifyPrescription(const PrescribedSequenceGpa& gpa,
                                       const BimatrixGame& game) {
  const std::vector<ActionPair>& p = gpa.prescription();
  for (ActionPair pair : p) {
    if (!game.Contains(pair)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prescription pair outside the game");
    }
  }
  if (gpa.threat().size() != game.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "threat strategy does not match the leader action count");
  }
  const Rational m = MaxFollowerPair(game).value;
  const Rational v = FollowerBestReplyValue(game, gpa.threat());
  const int horizon = static_cast<int>(p.size());

  // Suffix sums, computed back to front; report the earliest failure.
  std::vector<Rational> suffix(horizon + 1);
  for (int t = horizon - 1; t >= 0; --t) {
    suffix[t] = suffix[t + 1] + game.FollowerPayoff(p[t]);
  }
  for (int t = 1; t <= horizon; ++t) {
    if (suffix[t - 1] < m + v * Rational(horizon - t)) return {false, t};
  }
  return {};
}

Transcript Simulate(const GamePlayingAlgorithm& leader,
                    const GamePlayingAlgorithm& follower,
                    const BimatrixGame& game, int horizon, uint64_t seed) {
  if (leader.side() != PlayerSide::kLeader ||
      follower.side() != PlayerSide::kFollower) {
    throw Error(ErrorCode::kInvalidArgument,
                "simulate needs a leader GPA and a follower GPA");
  }
  Transcript out;
  out.pairs.reserve(horizon);
  for (int t = 0; t < horizon; ++t) {
    const MixedStrategy x = leader.Strategy(game, horizon, out.pairs);
    const MixedStrategy y = follower.Strategy(game, horizon, out.pairs);
    const int row = SampleIndex(x, CounterRandom(seed, 0, t));
    const int col = SampleIndex(y, CounterRandom(seed, 1, t));
    out.pairs.push_back({row, col});
  }
  return out;
}

RegretReport ExternalRegret(const BimatrixGame& game,
                            std::span<const ActionPair> pairs,
                            PlayerSide side) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyTranscript, "transcript has no rounds");
  }
  const bool leader = side == PlayerSide::kLeader;
  const int n = leader ? game.rows() : game.cols();
  auto payoff = [&](int own, const ActionPair& p) -> const Rational& {
    return leader ? game.LeaderPayoff(own, p.col)
                  : game.FollowerPayoff(p.row, own);
  };
  RegretReport out;
  std::vector<Rational> fixed(n);
  for (const ActionPair& p : pairs) {
    out.realized_total += payoff(leader ? p.row : p.col, p);
    for (int a = 0; a < n; ++a) fixed[a] += payoff(a, p);
  }
  for (int a = 1; a < n; ++a) {
    if (fixed[a] > fixed[out.best_fixed_action]) out.best_fixed_action = a;
  }
  out.total_regret = fixed[out.best_fixed_action] - out.realized_total;
  return out;
}

Rational StackelbergGap(const GamePlayingAlgorithm& leader,
                        const BimatrixGame& game, int horizon,
                        int64_t state_budget) {
  const Rational opt = StackelbergLp(game).opt;
  const BestResponseResult br =
      BestResponse(leader, game, horizon, state_budget);
  return opt - br.leader_value / Rational(horizon);
}

}  // namespace stackgpa
