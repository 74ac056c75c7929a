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

#ifndef STACKGPA_STACKELBERG_H_
#define STACKGPA_STACKELBERG_H_

#include <vector>

#include "stackgpa/game.h"
#include "stackgpa/lp.h"
#include "stackgpa/rational.h"

namespace stackgpa {

// The follower's minimax value V = min_x max_j x'M2 e_j and a leader
// strategy x* attaining it. Playing x* caps the follower at V per round.
struct ThreatResult {
  Rational value;
  MixedStrategy strategy;
};

ThreatResult Threat(const BimatrixGame& game);

// Best follower payoff against a fixed leader mixed strategy.
Rational FollowerBestReplyValue(const BimatrixGame& game,
                                const MixedStrategy& leader);

// Joint distribution over action pairs maximizing the leader's payoff
// subject to the follower receiving at least the threat value.
struct StackelbergLpResult {
  // Indexed by BimatrixGame::IndexOf(pair).
  std::vector<Rational> alpha;
  Rational opt;
  ThreatResult threat;

  const Rational& Weight(const BimatrixGame& game, ActionPair p) const {
    return alpha[game.IndexOf(p)];
  }
};

// The LP is built exactly as solved, exposed so tests can certify the
// solution against it.
LinearProgram BuildStackelbergLp(const BimatrixGame& game,
                                 const Rational& threat_value);

StackelbergLpResult StackelbergLp(const BimatrixGame& game);

// Pair maximizing the follower payoff m; ties go to the higher leader
// payoff, then to the lexicographically first pair.
struct FollowerOptimum {
  ActionPair pair;
  Rational value;
};

FollowerOptimum MaxFollowerPair(const BimatrixGame& game);

}  // namespace stackgpa

#endif  // STACKGPA_STACKELBERG_H_
