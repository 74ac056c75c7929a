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

#ifndef STACKGPA_ORACLE_H_
#define STACKGPA_ORACLE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>

#include "stackgpa/game.h"
#include "stackgpa/gpa.h"
#include "stackgpa/rational.h"

namespace stackgpa {

inline constexpr int64_t kDefaultStateBudget = 2'000'000;

struct BestResponseResult {
  // Every history prefix the search visited, on-path or not.
  std::map<HistoryKey, int> follower_policy;
  // Expected totals over all T rounds.
  Rational follower_value;
  Rational leader_value;
  int64_t states = 0;
};

// Upper bound on the number of history prefixes: sum_{t<=T} (rows*cols)^t.
BigInt WorstCaseStates(const BimatrixGame& game, int horizon);

// Exact follower best response by backward induction over history
// prefixes. Ties: follower value, then leader value, then lowest column.
// Throws kStateSpaceExceeded when more than `state_budget` prefixes are
// needed and kRandomnessContractViolation for correlated leaders.
BestResponseResult BestResponse(const GamePlayingAlgorithm& leader,
                                const BimatrixGame& game, int horizon,
                                int64_t state_budget = kDefaultStateBudget);

// The best response as a follower lookup table.
std::shared_ptr<LookupTableGpa> FollowerPolicyGpa(
    const BestResponseResult& result);

// Restriction of the policy to histories reached with positive probability
// when the leader plays against it.
std::map<HistoryKey, int> OnPathPolicy(const GamePlayingAlgorithm& leader,
                                       const BimatrixGame& game, int horizon,
                                       const BestResponseResult& result);

struct PrescriptionVerdict {
  bool obeys = true;
  // First round (1-based) whose check fails; 0 when obeys.
  int round = 0;
};

// Checks, for every round t, that obeying from t on is worth at least one
// round of the follower's best pair plus the threat value for each
// remaining round. Sound but conservative.
PrescriptionVerdict VerifyPrescription(const PrescribedSequenceGpa& gpa,
                                       const BimatrixGame& game);

// Plays the two GPAs against each other. Leader coins come from stream 0
// of `seed` and follower coins from stream 1, counter = round index.
Transcript Simulate(const GamePlayingAlgorithm& leader,
                    const GamePlayingAlgorithm& follower,
                    const BimatrixGame& game, int horizon, uint64_t seed);

struct RegretReport {
  Rational total_regret;
  int best_fixed_action = 0;  // zero-based
  Rational realized_total;
};

// Regret of `side` against the realized opponent actions. Ties for the best
// fixed action go to the lowest index. Throws kEmptyTranscript.
RegretReport ExternalRegret(const BimatrixGame& game,
                            std::span<const ActionPair> pairs,
                            PlayerSide side);

// OPT_LP - leader_value / T under the oracle follower.
Rational StackelbergGap(const GamePlayingAlgorithm& leader,
                        const BimatrixGame& game, int horizon,
                        int64_t state_budget = kDefaultStateBudget);

}  // namespace stackgpa

#endif  // STACKGPA_ORACLE_H_
