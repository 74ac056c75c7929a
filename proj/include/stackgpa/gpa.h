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

#ifndef STACKGPA_GPA_H_
#define STACKGPA_GPA_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stackgpa/game.h"
#include "stackgpa/rational.h"
#include "stackgpa/stackelberg.h"

namespace stackgpa {

enum class PlayerSide { kLeader, kFollower };

const char* PlayerSideName(PlayerSide side);
PlayerSide ParsePlayerSide(const std::string& name);

// How a GPA uses randomness.
//  kDeterministic: output is a pure action determined by the history.
//  kPerRound: a fresh, independent coin each round; the conditional mixed
//    strategy given the history is exposed exactly.
//  kCorrelated: coins shared across rounds. The oracle rejects these.
enum class Randomness { kDeterministic, kPerRound, kCorrelated };

// A repeated-game strategy: one function per round mapping the history of
// play (the first t-1 action pairs) to a mixed strategy over this player's
// own actions for round t. Implementations are immutable and may be shared
// across threads.
class GamePlayingAlgorithm {
 public:
  virtual ~GamePlayingAlgorithm() = default;

  virtual std::string kind() const = 0;
  virtual PlayerSide side() const { return PlayerSide::kLeader; }
  virtual Randomness randomness() const = 0;

  // Exact conditional strategy for round history.size() + 1 of a game with
  // the given horizon. The result has game.rows() entries for a leader and
  // game.cols() for a follower.
  virtual MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                                 History history) const = 0;
};

// Leader automaton that scripts a whole transcript. While the follower has
// matched every prescribed column it plays the prescribed row; after the
// first mismatch it plays the threat strategy for the rest of the game.
class PrescribedSequenceGpa : public GamePlayingAlgorithm {
 public:
  PrescribedSequenceGpa(std::vector<ActionPair> prescription,
                        MixedStrategy threat);

  std::string kind() const override { return "prescribed"; }
  Randomness randomness() const override;
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  const std::vector<ActionPair>& prescription() const { return prescription_; }
  const MixedStrategy& threat() const { return threat_; }
  int horizon() const { return static_cast<int>(prescription_.size()); }

  // Has the follower left the script anywhere in `history`?
  bool Triggered(History history) const;

 private:
  std::vector<ActionPair> prescription_;
  MixedStrategy threat_;
};

// T = c * N + r with r in [1, N]; counts[k] = alpha_k * c * N for pair index
// k (BimatrixGame::IndexOf order).
struct CycleParameters {
  BigInt cycle_length;  // N
  int64_t repetitions = 0;  // c
  int64_t remainder = 0;  // r
  std::vector<int64_t> counts;
};

struct DeterministicConstruction {
  std::shared_ptr<const PrescribedSequenceGpa> gpa;
  CycleParameters cycle;
  StackelbergLpResult lp;
  FollowerOptimum treat;
};

// Lays out the LP distribution over c * N rounds in ascending follower
// payoff order and fills the last r rounds with the follower's best pair.
// Throws kHorizonTooShort when T <= N.
DeterministicConstruction BuildDeterministicGpa(const BimatrixGame& game,
                                                int horizon);

struct SampledConstruction {
  std::shared_ptr<const PrescribedSequenceGpa> gpa;
  // The T-1 i.i.d. draws before swap repair, sorted in pair order.
  std::vector<ActionPair> raw_sample;
  int64_t swaps = 0;
  // True when m == V and the prescription is the constant best pair.
  bool degenerate = false;
  StackelbergLpResult lp;
  FollowerOptimum treat;
};

// Draws T-1 pairs from the LP distribution (draw k keyed by (seed, k)),
// replaces the follower's worst draws by the follower-optimal pair until the
// follower average reaches V, sorts, and appends one follower-optimal pair.
// Throws kHorizonTooShort when T < 2.
SampledConstruction BuildSampledGpa(const BimatrixGame& game, int horizon,
                                    uint64_t seed);

// Plays cooperate.row while the follower has always answered cooperate.col,
// and punish_row forever after.
class GrimTriggerGpa : public GamePlayingAlgorithm {
 public:
  GrimTriggerGpa(ActionPair cooperate, int punish_row)
      : cooperate_(cooperate), punish_row_(punish_row) {}

  std::string kind() const override { return "grim_trigger"; }
  Randomness randomness() const override { return Randomness::kDeterministic; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  ActionPair cooperate() const { return cooperate_; }
  int punish_row() const { return punish_row_; }

 private:
  ActionPair cooperate_;
  int punish_row_;
};

// defect_row for the first phase1_len rounds, cooperate.row afterwards;
// defect_row forever once the follower plays anything but cooperate.col.
class TwoPhaseGpa : public GamePlayingAlgorithm {
 public:
  TwoPhaseGpa(ActionPair cooperate, int defect_row, int phase1_len);

  std::string kind() const override { return "two_phase"; }
  Randomness randomness() const override { return Randomness::kDeterministic; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  ActionPair cooperate() const { return cooperate_; }
  int defect_row() const { return defect_row_; }
  int phase1_len() const { return phase1_len_; }

 private:
  ActionPair cooperate_;
  int defect_row_;
  int phase1_len_;
};

// Exponential weights on the realized opponent actions (full information).
// The exponentials are evaluated in long double; the reported strategy is
// the exact rational value of the evaluated weights, renormalized. Nothing
// in the LP or construction paths consumes these weights.
class MultiplicativeWeightsGpa : public GamePlayingAlgorithm {
 public:
  MultiplicativeWeightsGpa(PlayerSide side, Rational learning_rate);

  std::string kind() const override { return "mw"; }
  PlayerSide side() const override { return side_; }
  Randomness randomness() const override { return Randomness::kPerRound; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  // Unnormalized log-weights eta * cumulative payoff, one per own action.
  std::vector<long double> LogWeights(const BimatrixGame& game,
                                      History history) const;

  const Rational& learning_rate() const { return learning_rate_; }

 private:
  PlayerSide side_;
  Rational learning_rate_;
};

using HistoryKey = std::vector<ActionPair>;

// Deterministic GPA given explicitly as history -> own action. Querying a
// history that has no entry throws kMissingEntry.
class LookupTableGpa : public GamePlayingAlgorithm {
 public:
  LookupTableGpa(PlayerSide side, std::map<HistoryKey, int> table)
      : side_(side), table_(std::move(table)) {}

  std::string kind() const override { return "lookup"; }
  PlayerSide side() const override { return side_; }
  Randomness randomness() const override { return Randomness::kDeterministic; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  int Action(History history) const;
  const std::map<HistoryKey, int>& table() const { return table_; }

 private:
  PlayerSide side_;
  std::map<HistoryKey, int> table_;
};

// Same mixed strategy every round, ignoring history.
class ConstantGpa : public GamePlayingAlgorithm {
 public:
  ConstantGpa(PlayerSide side, MixedStrategy strategy)
      : side_(side), strategy_(std::move(strategy)) {}

  std::string kind() const override { return "constant"; }
  PlayerSide side() const override { return side_; }
  Randomness randomness() const override;
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  const MixedStrategy& strategy() const { return strategy_; }

 private:
  PlayerSide side_;
  MixedStrategy strategy_;
};

// Plays actions[t] in round t regardless of history (an obedient follower
// replaying a prescription, for instance).
class SequenceGpa : public GamePlayingAlgorithm {
 public:
  SequenceGpa(PlayerSide side, std::vector<int> actions)
      : side_(side), actions_(std::move(actions)) {}

  std::string kind() const override { return "sequence"; }
  PlayerSide side() const override { return side_; }
  Randomness randomness() const override { return Randomness::kDeterministic; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  const std::vector<int>& actions() const { return actions_; }

 private:
  PlayerSide side_;
  std::vector<int> actions_;
};

// Follower that best-replies to the leader's current-round strategy, ignoring
// the future. Ties: higher leader payoff, then lower column index.
class MyopicFollowerGpa : public GamePlayingAlgorithm {
 public:
  explicit MyopicFollowerGpa(std::shared_ptr<const GamePlayingAlgorithm> leader)
      : leader_(std::move(leader)) {}

  std::string kind() const override { return "myopic"; }
  PlayerSide side() const override { return PlayerSide::kFollower; }
  Randomness randomness() const override { return Randomness::kDeterministic; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

 private:
  std::shared_ptr<const GamePlayingAlgorithm> leader_;
};

// Sequence of follower columns a prescription asks for.
std::vector<int> FollowerColumns(const std::vector<ActionPair>& pairs);

}  // namespace stackgpa

#endif  // STACKGPA_GPA_H_
