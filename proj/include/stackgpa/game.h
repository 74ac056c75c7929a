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

#ifndef STACKGPA_GAME_H_
#define STACKGPA_GAME_H_

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "stackgpa/rational.h"

namespace stackgpa {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Zero-based (leader row, follower column). Files and reports use 1-based
// indices; conversion happens at the I/O boundary only.
struct ActionPair {
  int row = 0;
  int col = 0;

  friend bool operator==(const ActionPair&, const ActionPair&) = default;
  friend auto operator<=>(const ActionPair&, const ActionPair&) = default;
};

using History = std::span<const ActionPair>;

// Two-player game with payoffs in [-1, 1], all multiples of 1/A. Immutable
// once validated; construct through ValidateGame.
class BimatrixGame {
 public:
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& LeaderPayoff(int row, int col) const {
    return leader_[row * cols_ + col];
  }
  const Rational& FollowerPayoff(int row, int col) const {
    return follower_[row * cols_ + col];
  }
  const Rational& LeaderPayoff(ActionPair p) const {
    return LeaderPayoff(p.row, p.col);
  }
  const Rational& FollowerPayoff(ActionPair p) const {
    return FollowerPayoff(p.row, p.col);
  }
  // Granularity: LCM of every payoff denominator.
  const BigInt& granularity() const { return granularity_; }
  int num_pairs() const { return rows_ * cols_; }
  ActionPair PairAt(int index) const { return {index / cols_, index % cols_}; }
  int IndexOf(ActionPair p) const { return p.row * cols_ + p.col; }
  bool Contains(ActionPair p) const {
    return p.row >= 0 && p.row < rows_ && p.col >= 0 && p.col < cols_;
  }

  RationalMatrix LeaderMatrix() const;
  RationalMatrix FollowerMatrix() const;

 private:
  friend BimatrixGame ValidateGame(const RationalMatrix&,
                                   const RationalMatrix&);
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> leader_;
  std::vector<Rational> follower_;
  BigInt granularity_ = 1;
};

// Throws kShapeMismatch for ragged, empty or differently shaped matrices and
// kEntryOutOfRange for payoffs outside [-1, 1].
BimatrixGame ValidateGame(const RationalMatrix& leader,
                          const RationalMatrix& follower);

// All action pairs, follower payoff nondecreasing; ties put the higher leader
// payoff first, then (row, col) lexicographic.
std::vector<ActionPair> PairOrdering(const BimatrixGame& game);

// Strict weak order used by PairOrdering, exposed so other constructions can
// sort pair sequences consistently.
bool PairOrderLess(const BimatrixGame& game, ActionPair a, ActionPair b);

// Probability vector with exact entries.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws kInvalidArgument if any weight is negative or the sum is not 1.
  explicit MixedStrategy(std::vector<Rational> weights);
  static MixedStrategy Pure(int size, int action);
  static MixedStrategy Uniform(int size);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& operator[](int i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  // Index of the single action carrying all mass, or -1.
  int PureAction() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> weights_;
};

struct Transcript {
  std::vector<ActionPair> pairs;

  int horizon() const { return static_cast<int>(pairs.size()); }
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct AveragePayoff {
  Rational leader;
  Rational follower;
};

// Exact per-round averages over the transcript. Throws kEmptyTranscript.
AveragePayoff AveragePayoffs(const BimatrixGame& game,
                             std::span<const ActionPair> pairs);
inline AveragePayoff AveragePayoffs(const BimatrixGame& game,
                                    const Transcript& transcript) {
  return AveragePayoffs(game, transcript.pairs);
}

}  // namespace stackgpa

#endif  // STACKGPA_GAME_H_
