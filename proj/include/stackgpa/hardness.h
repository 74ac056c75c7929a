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

#ifndef STACKGPA_HARDNESS_H_
#define STACKGPA_HARDNESS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackgpa/game.h"
#include "stackgpa/gpa.h"
#include "stackgpa/rational.h"

namespace stackgpa {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Throws kInvalidArgument for self-loops, duplicate edges or out-of-range
// endpoints.
void ValidateGraph(const Graph& graph);

// "n m" header followed by m lines "u v" (1-based). Blank lines and lines
// starting with '#' are skipped. Errors name the offending line.
Graph ParseEdgeList(const std::string& text);
std::string FormatEdgeList(const Graph& graph);

Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph PathGraph(int n);

// Payoff tensors indexed (r, s, t) for players of sizes n1, n2, n3.
class ThreePlayerGame {
 public:
  ThreePlayerGame(int n1, int n2, int n3, int null_action);

  int size(int player) const { return sizes_[player]; }
  // Player-3 action that pays everybody 1 (t_0 in the reduction).
  int null_action() const { return null_action_; }

  const Rational& Payoff(int player, int r, int s, int t) const {
    return payoffs_[player][Index(r, s, t)];
  }
  void SetPayoff(int player, int r, int s, int t, Rational value) {
    payoffs_[player][Index(r, s, t)] = std::move(value);
  }

 private:
  size_t Index(int r, int s, int t) const {
    return (static_cast<size_t>(r) * sizes_[1] + s) * sizes_[2] + t;
  }

  int sizes_[3];
  int null_action_;
  std::vector<Rational> payoffs_[3];
};

// Player-3 action layout: t_v = v, t_e = n + e, t_0 = n + m.
inline int VertexAction(int v) { return v; }
inline int EdgeAction(const Graph& g, int e) { return g.n + e; }
inline int NullAction(const Graph& g) {
  return g.n + static_cast<int>(g.edges.size());
}

// Builds the three-player game of a graph. Throws kGraphTooSmall for n < 3.
ThreePlayerGame ReduceGraph(const Graph& graph);

inline constexpr int kDefaultCoverMaxVertices = 20;

// Smallest vertex cover of size at most floor(n/2), lexicographically first
// among the smallest; nullopt if none. Throws kBudgetExceeded above max_n.
std::optional<std::vector<int>> BalancedVertexCover(
    const Graph& graph, int max_n = kDefaultCoverMaxVertices);

bool IsVertexCover(const Graph& graph, const std::vector<int>& cover);

// p1 uniform on the cover, p2 uniform on the rest. Covers smaller than
// floor(n/2) are padded with the lowest-index outside vertices. Throws
// kInvalidCover for a non-cover, repeated vertices or an oversized cover.
std::pair<MixedStrategy, MixedStrategy> CoverStrategies(
    const Graph& graph, const std::vector<int>& cover);

struct Player3AuditResult {
  int best_action = 0;
  Rational best_value;
  std::vector<Rational> values;  // per Player-3 action
};

// Player 3's exact best reply to independent p1, p2. Ties go to the null
// action, then to the lowest index. Throws kDimensionMismatch.
Player3AuditResult Player3Audit(const ThreePlayerGame& game,
                                const MixedStrategy& p1,
                                const MixedStrategy& p2);

inline constexpr int64_t kDefaultGridBudget = 20'000'000;

struct GridAuditResult {
  Rational worst_case;
  // A grid pair attaining the minimum (first in enumeration order).
  MixedStrategy p1;
  MixedStrategy p2;
  int64_t points_per_player1 = 0;
  int64_t points_per_player2 = 0;
};

// All points of the simplex with coordinates in multiples of 1/resolution,
// in lexicographic order of the numerators.
std::vector<std::vector<int>> SimplexGrid(int dimension, int resolution);

// Minimum over grid pairs (p1, p2) of Player 3's best-reply value. An
// empirical floor only. Throws kBudgetExceeded if the number of pairs
// exceeds `budget`.
GridAuditResult GridAuditPlayer3(const ThreePlayerGame& game, int resolution,
                                 int64_t budget = kDefaultGridBudget,
                                 int threads = 0);

// 1 + 1 / ((n - 2) * n^(c - 1)).
Rational Player3Threshold(int n, int c_exponent);

// Leader of the coloring game: action 0 in rounds 1..T-1; in round T it
// plays action n-1 with probability 1 - g/n and action 0 otherwise, where g
// scores the follower's first T-1 moves as a coloring of vertices 1..T-1.
class ColoringLeaderGpa : public GamePlayingAlgorithm {
 public:
  explicit ColoringLeaderGpa(Graph graph);

  std::string kind() const override { return "coloring"; }
  Randomness randomness() const override { return Randomness::kPerRound; }
  MixedStrategy Strategy(const BimatrixGame& game, int horizon,
                         History history) const override;

  // n if the follower ever played action n-1 or the coloring is invalid,
  // otherwise the number of distinct actions used.
  int Score(History history) const;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

struct ColoringInstance {
  BimatrixGame game;  // n x n, follower payoff 1 at (n, n), 0 elsewhere
  int horizon = 0;    // n
  std::shared_ptr<const ColoringLeaderGpa> leader;
};

// Throws kGraphTooSmall for n < 2.
ColoringInstance MakeColoringInstance(const Graph& graph);

}  // namespace stackgpa

#endif  // STACKGPA_HARDNESS_H_
