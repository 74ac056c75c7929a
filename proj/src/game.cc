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

#include "stackgpa/game.h"

#include <algorithm>
#include <string>

#include "stackgpa/errors.h"

namespace stackgpa {
namespace {

std::string Cell(int row, int col) {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

}  // namespace

RationalMatrix BimatrixGame::LeaderMatrix() const {
  RationalMatrix out(rows_, std::vector<Rational>(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i][j] = LeaderPayoff(i, j);
  }
  return out;
}

RationalMatrix BimatrixGame::FollowerMatrix() const {
  RationalMatrix out(rows_, std::vector<Rational>(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i][j] = FollowerPayoff(i, j);
  }
  return out;
}

BimatrixGame ValidateGame(const RationalMatrix& leader,
                          const RationalMatrix& follower) {
  if (leader.empty() || leader.front().empty()) {
    throw Error(ErrorCode::kShapeMismatch, "payoff matrix is empty");
  }
  const int rows = static_cast<int>(leader.size());
  const int cols = static_cast<int>(leader.front().size());
  if (static_cast<int>(follower.size()) != rows) {
    throw Error(ErrorCode::kShapeMismatch, "M1 and M2 row counts differ");
  }
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(leader[i].size()) != cols ||
        static_cast<int>(follower[i].size()) != cols) {
      throw Error(ErrorCode::kShapeMismatch,
                  "row " + std::to_string(i + 1) + " has the wrong length");
    }
  }

  BimatrixGame game;
  game.rows_ = rows;
  game.cols_ = cols;
  const Rational lo(-1), hi(1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      for (const auto* m : {&leader, &follower}) {
        const Rational& v = (*m)[i][j];
        if (v < lo || v > hi) {
          throw Error(ErrorCode::kEntryOutOfRange,
                      std::string(m == &leader ? "M1" : "M2") + Cell(i, j) +
                          " = " + v.ToString() + " is outside [-1, 1]");
        }
      }
      game.leader_.push_back(leader[i][j]);
      game.follower_.push_back(follower[i][j]);
    }
  }
  game.granularity_ =
      Lcm(DenominatorLcm(game.leader_), DenominatorLcm(game.follower_));
  return game;
}

bool PairOrderLess(const BimatrixGame& game, ActionPair a, ActionPair b) {
  const Rational& fa = game.FollowerPayoff(a);
  const Rational& fb = game.FollowerPayoff(b);
  if (fa != fb) return fa < fb;
  const Rational& la = game.LeaderPayoff(a);
  const Rational& lb = game.LeaderPayoff(b);
  if (la != lb) return la > lb;
  return a < b;
}

std::vector<ActionPair> PairOrdering(const BimatrixGame& game) {
  std::vector<ActionPair> pairs;
  pairs.reserve(game.num_pairs());
  for (int k = 0; k < game.num_pairs(); ++k) pairs.push_back(game.PairAt(k));
  std::sort(pairs.begin(), pairs.end(), [&](ActionPair a, ActionPair b) {
    return PairOrderLess(game, a, b);
  });
  return pairs;
}

MixedStrategy::MixedStrategy(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty mixed strategy");
  }
  Rational total;
  for (const Rational& w : weights_) {
    if (w.Sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative weight " + w.ToString());
    }
    total += w;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "weights sum to " + total.ToString() + ", not 1");
  }
}

MixedStrategy MixedStrategy::Pure(int size, int action) {
  std::vector<Rational> w(size);
  w.at(action) = 1;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::Uniform(int size) {
  return MixedStrategy(std::vector<Rational>(size, Rational(1, size)));
}

int MixedStrategy::PureAction() const {
  for (int i = 0; i < size(); ++i) {
    if (weights_[i] == Rational(1)) return i;
  }
  return -1;
}

AveragePayoff AveragePayoffs(const BimatrixGame& game,
                             std::span<const ActionPair> pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyTranscript, "transcript has no rounds");
  }
  AveragePayoff out;
  for (const ActionPair& p : pairs) {
    out.leader += game.LeaderPayoff(p);
    out.follower += game.FollowerPayoff(p);
  }
  const Rational horizon(static_cast<int64_t>(pairs.size()));
  out.leader /= horizon;
  out.follower /= horizon;
  return out;
}

}  // namespace stackgpa
