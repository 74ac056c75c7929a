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

#include "stackgpa/gpa.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "stackgpa/errors.h"
#include "stackgpa/random.h"

namespace stackgpa {
namespace {

int NumActions(const BimatrixGame& game, PlayerSide side) {
  return side == PlayerSide::kLeader ? game.rows() : game.cols();
}

void CheckRow(const BimatrixGame& game, int row) {
  if (row < 0 || row >= game.rows()) {
    throw Error(ErrorCode::kInvalidArgument,
                "leader action " + std::to_string(row + 1) + " out of range");
  }
}

void CheckPair(const BimatrixGame& game, ActionPair p) {
  if (!game.Contains(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "action pair (" + std::to_string(p.row + 1) + "," +
                    std::to_string(p.col + 1) + ") out of range");
  }
}

bool FollowerLeft(History history, int col) {
  return std::any_of(history.begin(), history.end(),
                     [col](const ActionPair& p) { return p.col != col; });
}

}  // namespace

const char* PlayerSideName(PlayerSide side) {
  return side == PlayerSide::kLeader ? "leader" : "follower";
}

PlayerSide ParsePlayerSide(const std::string& name) {
  if (name == "leader") return PlayerSide::kLeader;
  if (name == "follower") return PlayerSide::kFollower;
  throw Error(ErrorCode::kParse, "unknown side \"" + name + "\"");
}

int SampleIndex(const MixedStrategy& strategy, uint64_t bits) {
  static const BigInt kTwo64 = BigInt(1) << 64;
  const Rational u(BigInt(std::to_string(bits)), kTwo64);
  Rational cumulative;
  int last_positive = -1;
  for (int i = 0; i < strategy.size(); ++i) {
    if (strategy[i].IsZero()) continue;
    last_positive = i;
    cumulative += strategy[i];
    if (u < cumulative) return i;
  }
  return last_positive;
}

// ---------------------------------------------------------------------------
// Prescribed sequence automaton.

PrescribedSequenceGpa::PrescribedSequenceGpa(
    std::vector<ActionPair> prescription, MixedStrategy threat)
    : prescription_(std::move(prescription)), threat_(std::move(threat)) {
  if (prescription_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty prescription");
  }
}

Randomness PrescribedSequenceGpa::randomness() const {
  return threat_.PureAction() >= 0 ? Randomness::kDeterministic
                                   : Randomness::kPerRound;
}

bool PrescribedSequenceGpa::Triggered(History history) const {
  for (size_t t = 0; t < history.size(); ++t) {
    if (history[t].col != prescription_[t].col) return true;
  }
  return false;
}

MixedStrategy PrescribedSequenceGpa::Strategy(const BimatrixGame& game,
                                              int /*horizon*/,
                                              History history) const {
  const size_t t = history.size();
  if (t >= prescription_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "round " + std::to_string(t + 1) + " is past the prescription");
  }
  if (threat_.size() != game.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "threat strategy does not match the leader action count");
  }
  if (Triggered(history)) return threat_;
  CheckPair(game, prescription_[t]);
  return MixedStrategy::Pure(game.rows(), prescription_[t].row);
}

// ---------------------------------------------------------------------------
// Constructions.

DeterministicConstruction BuildDeterministicGpa(const BimatrixGame& game,
                                                int horizon) {
  DeterministicConstruction out{nullptr, {}, StackelbergLp(game),
                                MaxFollowerPair(game)};
  CycleParameters& cycle = out.cycle;
  cycle.cycle_length = DenominatorLcm(out.lp.alpha);
  if (BigInt(horizon) <= cycle.cycle_length) {
    throw Error(ErrorCode::kHorizonTooShort,
                "T = " + std::to_string(horizon) +
                    " must exceed the cycle length N = " +
                    cycle.cycle_length.get_str());
  }
  const int64_t n = cycle.cycle_length.get_si();
  cycle.remainder = horizon % n == 0 ? n : horizon % n;
  cycle.repetitions = (horizon - cycle.remainder) / n;

  const Rational block(cycle.repetitions * n);
  cycle.counts.resize(game.num_pairs());
  for (int k = 0; k < game.num_pairs(); ++k) {
    Rational count = out.lp.alpha[k] * block;
    cycle.counts[k] = count.numerator().get_si();
  }

  std::vector<ActionPair> prescription;
  prescription.reserve(horizon);
  for (ActionPair p : PairOrdering(game)) {
    prescription.insert(prescription.end(), cycle.counts[game.IndexOf(p)], p);
  }
  prescription.insert(prescription.end(), cycle.remainder, out.treat.pair);
  out.gpa = std::make_shared<PrescribedSequenceGpa>(std::move(prescription),
                                                    out.lp.threat.strategy);
  return out;
}

SampledConstruction BuildSampledGpa(const BimatrixGame& game, int horizon,
                                    uint64_t seed) {
  if (horizon < 2) {
    throw Error(ErrorCode::kHorizonTooShort,
                "sampled construction needs T >= 2, got " +
                    std::to_string(horizon));
  }
  SampledConstruction out{nullptr, {}, 0, false, StackelbergLp(game),
                          MaxFollowerPair(game)};
  const Rational& threat_value = out.lp.threat.value;
  const ActionPair treat = out.treat.pair;

  if (out.treat.value == threat_value) {
    out.degenerate = true;
    out.gpa = std::make_shared<PrescribedSequenceGpa>(
        std::vector<ActionPair>(horizon, treat), out.lp.threat.strategy);
    return out;
  }

  const MixedStrategy alpha(out.lp.alpha);
  const int draws = horizon - 1;
  std::vector<ActionPair> sample;
  sample.reserve(horizon);
  for (int k = 0; k < draws; ++k) {
    sample.push_back(game.PairAt(SampleIndex(alpha, CounterRandom(seed, 0, k))));
  }
  auto order = [&game](ActionPair a, ActionPair b) {
    return PairOrderLess(game, a, b);
  };
  std::sort(sample.begin(), sample.end(), order);
  out.raw_sample = sample;

  Rational follower_total;
  for (ActionPair p : sample) follower_total += game.FollowerPayoff(p);
  const Rational target = threat_value * Rational(draws);
  for (int i = 0; follower_total < target; ++i) {
    follower_total += out.treat.value - game.FollowerPayoff(sample[i]);
    sample[i] = treat;
    ++out.swaps;
  }
  std::sort(sample.begin(), sample.end(), order);
  sample.push_back(treat);
  out.gpa = std::make_shared<PrescribedSequenceGpa>(std::move(sample),
                                                    out.lp.threat.strategy);
  return out;
}

// ---------------------------------------------------------------------------
// Reference GPAs.

MixedStrategy GrimTriggerGpa::Strategy(const BimatrixGame& game,
                                       int /*horizon*/,
                                       History history) const {
  CheckPair(game, cooperate_);
  CheckRow(game, punish_row_);
  const int row =
      FollowerLeft(history, cooperate_.col) ? punish_row_ : cooperate_.row;
  return MixedStrategy::Pure(game.rows(), row);
}

TwoPhaseGpa::TwoPhaseGpa(ActionPair cooperate, int defect_row, int phase1_len)
    : cooperate_(cooperate), defect_row_(defect_row), phase1_len_(phase1_len) {
  if (phase1_len < 0) {
    throw Error(ErrorCode::kInvalidArgument, "phase1_len must be >= 0");
  }
}

MixedStrategy TwoPhaseGpa::Strategy(const BimatrixGame& game, int horizon,
                                    History history) const {
  CheckPair(game, cooperate_);
  CheckRow(game, defect_row_);
  if (phase1_len_ > horizon) {
    throw Error(ErrorCode::kInvalidArgument, "phase1_len exceeds the horizon");
  }
  const bool defect = FollowerLeft(history, cooperate_.col) ||
                      static_cast<int>(history.size()) < phase1_len_;
  return MixedStrategy::Pure(game.rows(),
                             defect ? defect_row_ : cooperate_.row);
}

MultiplicativeWeightsGpa::MultiplicativeWeightsGpa(PlayerSide side,
                                                   Rational learning_rate)
    : side_(side), learning_rate_(std::move(learning_rate)) {
  if (learning_rate_.Sign() <= 0 || learning_rate_ >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "learning rate must lie in (0, 1)");
  }
}

std::vector<long double> MultiplicativeWeightsGpa::LogWeights(
    const BimatrixGame& game, History history) const {
  const int n = NumActions(game, side_);
  std::vector<Rational> cumulative(n);
  for (const ActionPair& h : history) {
    for (int a = 0; a < n; ++a) {
      cumulative[a] += side_ == PlayerSide::kLeader
                           ? game.LeaderPayoff(a, h.col)
                           : game.FollowerPayoff(h.row, a);
    }
  }
  const long double eta = learning_rate_.ToDouble();
  std::vector<long double> out(n);
  for (int a = 0; a < n; ++a) out[a] = eta * cumulative[a].ToDouble();
  return out;
}

MixedStrategy MultiplicativeWeightsGpa::Strategy(const BimatrixGame& game,
                                                 int /*horizon*/,
                                                 History history) const {
  std::vector<long double> logw = LogWeights(game, history);
  const long double top = *std::max_element(logw.begin(), logw.end());
  std::vector<Rational> weights;
  weights.reserve(logw.size());
  Rational total;
  for (long double lw : logw) {
    weights.push_back(
        Rational::FromDouble(static_cast<double>(std::exp(lw - top))));
    total += weights.back();
  }
  for (Rational& w : weights) w /= total;
  return MixedStrategy(std::move(weights));
}

int LookupTableGpa::Action(History history) const {
  auto it = table_.find(HistoryKey(history.begin(), history.end()));
  if (it == table_.end()) {
    throw Error(ErrorCode::kMissingEntry,
                "no table entry for a history of length " +
                    std::to_string(history.size()));
  }
  return it->second;
}

MixedStrategy LookupTableGpa::Strategy(const BimatrixGame& game,
                                       int /*horizon*/,
                                       History history) const {
  const int n = NumActions(game, side_);
  const int action = Action(history);
  if (action < 0 || action >= n) {
    throw Error(ErrorCode::kInvalidArgument, "table action out of range");
  }
  return MixedStrategy::Pure(n, action);
}

Randomness ConstantGpa::randomness() const {
  return strategy_.PureAction() >= 0 ? Randomness::kDeterministic
                                     : Randomness::kPerRound;
}

MixedStrategy ConstantGpa::Strategy(const BimatrixGame& game, int /*horizon*/,
                                    History /*history*/) const {
  if (strategy_.size() != NumActions(game, side_)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "constant strategy has the wrong number of actions");
  }
  return strategy_;
}

MixedStrategy SequenceGpa::Strategy(const BimatrixGame& game, int /*horizon*/,
                                    History history) const {
  const size_t t = history.size();
  if (t >= actions_.size()) {
    throw Error(ErrorCode::kMissingEntry,
                "sequence has no action for round " + std::to_string(t + 1));
  }
  const int n = NumActions(game, side_);
  if (actions_[t] < 0 || actions_[t] >= n) {
    throw Error(ErrorCode::kInvalidArgument, "sequence action out of range");
  }
  return MixedStrategy::Pure(n, actions_[t]);
}

MixedStrategy MyopicFollowerGpa::Strategy(const BimatrixGame& game,
                                          int horizon, History history) const {
  const MixedStrategy x = leader_->Strategy(game, horizon, history);
  int best = -1;
  Rational best_follower, best_leader;
  for (int j = 0; j < game.cols(); ++j) {
    Rational f, l;
    for (int i = 0; i < game.rows(); ++i) {
      if (x[i].IsZero()) continue;
      f += x[i] * game.FollowerPayoff(i, j);
      l += x[i] * game.LeaderPayoff(i, j);
    }
    if (best < 0 || f > best_follower ||
        (f == best_follower && l > best_leader)) {
      best = j;
      best_follower = std::move(f);
      best_leader = std::move(l);
    }
  }
  return MixedStrategy::Pure(game.cols(), best);
}

std::vector<int> FollowerColumns(const std::vector<ActionPair>& pairs) {
  std::vector<int> cols;
  cols.reserve(pairs.size());
  for (const ActionPair& p : pairs) cols.push_back(p.col);
  return cols;
}

}  // namespace stackgpa
