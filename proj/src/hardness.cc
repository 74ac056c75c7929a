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

#include "stackgpa/hardness.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "stackgpa/errors.h"

namespace stackgpa {
namespace {

std::string LineError(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

bool NextCombination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

void GridRecurse(int remaining, int slots, std::vector<int>& point,
                 std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    point.push_back(remaining);
    out.push_back(point);
    point.pop_back();
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    point.push_back(a);
    GridRecurse(remaining - a, slots - 1, point, out);
    point.pop_back();
  }
}

MixedStrategy GridStrategy(const std::vector<int>& point, int resolution) {
  std::vector<Rational> w;
  w.reserve(point.size());
  for (int a : point) w.emplace_back(a, resolution);
  return MixedStrategy(std::move(w));
}

}  // namespace

// ---------------------------------------------------------------------------
// Graphs.

void ValidateGraph(const Graph& graph) {
  if (graph.n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || u >= graph.n || v < 0 || v >= graph.n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u + 1) + "," +
                      std::to_string(v + 1) + ") references a missing vertex");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u + 1));
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge (" + std::to_string(u + 1) + "," +
                      std::to_string(v + 1) + ")");
    }
  }
}

Graph ParseEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int64_t m = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int64_t a, b;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw Error(ErrorCode::kParse,
                  LineError(line_no, "expected two integers"));
    }
    if (!have_header) {
      if (a < 0 || b < 0 || a > 1'000'000) {
        throw Error(ErrorCode::kParse, LineError(line_no, "bad header"));
      }
      g.n = static_cast<int>(a);
      m = b;
      have_header = true;
      continue;
    }
    if (a < 1 || a > g.n || b < 1 || b > g.n) {
      throw Error(ErrorCode::kParse,
                  LineError(line_no, "vertex out of range 1.." +
                                         std::to_string(g.n)));
    }
    g.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!have_header) {
    throw Error(ErrorCode::kParse, "missing \"n m\" header");
  }
  if (static_cast<int64_t>(g.edges.size()) != m) {
    throw Error(ErrorCode::kParse,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(g.edges.size()));
  }
  try {
    ValidateGraph(g);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return g;
}

std::string FormatEdgeList(const Graph& graph) {
  std::ostringstream out;
  out << graph.n << ' ' << graph.edges.size() << '\n';
  for (auto [u, v] : graph.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph CycleGraph(int n) {
  Graph g{n, {}};
  for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

Graph CompleteGraph(int n) {
  Graph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

Graph PathGraph(int n) {
  Graph g{n, {}};
  for (int v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

// ---------------------------------------------------------------------------
// Reduction.

ThreePlayerGame::ThreePlayerGame(int n1, int n2, int n3, int null_action)
    : sizes_{n1, n2, n3}, null_action_(null_action) {
  const size_t cells = static_cast<size_t>(n1) * n2 * n3;
  for (auto& p : payoffs_) p.assign(cells, Rational(0));
}

ThreePlayerGame ReduceGraph(const Graph& graph) {
  ValidateGraph(graph);
  const int n = graph.n;
  if (n < 3) {
    throw Error(ErrorCode::kGraphTooSmall,
                "reduction needs n >= 3, got " + std::to_string(n));
  }
  const int m = static_cast<int>(graph.edges.size());
  const int t0 = NullAction(graph);
  ThreePlayerGame game(n, n, n + m + 1, t0);
  const Rational high(n, n - 2);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int p = 0; p < 3; ++p) game.SetPayoff(p, r, s, t0, Rational(1));
      for (int v = 0; v < n; ++v) {
        if (r != v && s != v) game.SetPayoff(2, r, s, VertexAction(v), high);
      }
      for (int e = 0; e < m; ++e) {
        auto [a, b] = graph.edges[e];
        if (r != a && r != b) {
          game.SetPayoff(2, r, s, EdgeAction(graph, e), high);
        }
      }
    }
  }
  return game;
}

// ---------------------------------------------------------------------------
// Balanced vertex cover.

bool IsVertexCover(const Graph& graph, const std::vector<int>& cover) {
  std::vector<bool> in(graph.n, false);
  for (int v : cover) {
    if (v < 0 || v >= graph.n) return false;
    in[v] = true;
  }
  return std::all_of(graph.edges.begin(), graph.edges.end(),
                     [&in](auto e) { return in[e.first] || in[e.second]; });
}

std::optional<std::vector<int>> BalancedVertexCover(const Graph& graph,
                                                    int max_n) {
  ValidateGraph(graph);
  if (graph.n > max_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive cover search limited to n <= " +
                    std::to_string(max_n) + ", got " +
                    std::to_string(graph.n));
  }
  for (int k = 0; k <= graph.n / 2; ++k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
      if (IsVertexCover(graph, c)) return c;
    } while (NextCombination(c, graph.n));
  }
  return std::nullopt;
}

std::pair<MixedStrategy, MixedStrategy> CoverStrategies(
    const Graph& graph, const std::vector<int>& cover) {
  ValidateGraph(graph);
  if (graph.n < 2) {
    throw Error(ErrorCode::kGraphTooSmall, "need at least 2 vertices");
  }
  const int half = graph.n / 2;
  std::vector<bool> in(graph.n, false);
  for (int v : cover) {
    if (v < 0 || v >= graph.n || in[v]) {
      throw Error(ErrorCode::kInvalidCover,
                  "vertex list has an out-of-range or repeated entry");
    }
    in[v] = true;
  }
  if (static_cast<int>(cover.size()) > half) {
    throw Error(ErrorCode::kInvalidCover,
                "cover has " + std::to_string(cover.size()) +
                    " vertices, more than floor(n/2) = " +
                    std::to_string(half));
  }
  if (!IsVertexCover(graph, cover)) {
    throw Error(ErrorCode::kInvalidCover, "some edge is not covered");
  }
  int size = static_cast<int>(cover.size());
  for (int v = 0; v < graph.n && size < half; ++v) {
    if (!in[v]) {
      in[v] = true;
      ++size;
    }
  }
  std::vector<Rational> p1(graph.n), p2(graph.n);
  for (int v = 0; v < graph.n; ++v) {
    if (in[v]) {
      p1[v] = Rational(1, half);
    } else {
      p2[v] = Rational(1, graph.n - half);
    }
  }
  return {MixedStrategy(std::move(p1)), MixedStrategy(std::move(p2))};
}

// ---------------------------------------------------------------------------
// Player-3 audits.

Player3AuditResult Player3Audit(const ThreePlayerGame& game,
                                const MixedStrategy& p1,
                                const MixedStrategy& p2) {
  if (p1.size() != game.size(0) || p2.size() != game.size(1)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategies have sizes " + std::to_string(p1.size()) + ", " +
                    std::to_string(p2.size()) + "; game expects " +
                    std::to_string(game.size(0)) + ", " +
                    std::to_string(game.size(1)));
  }
  Player3AuditResult out;
  out.values.assign(game.size(2), Rational(0));
  for (int r = 0; r < game.size(0); ++r) {
    if (p1[r].IsZero()) continue;
    for (int s = 0; s < game.size(1); ++s) {
      if (p2[s].IsZero()) continue;
      const Rational w = p1[r] * p2[s];
      for (int t = 0; t < game.size(2); ++t) {
        const Rational& u = game.Payoff(2, r, s, t);
        if (!u.IsZero()) out.values[t] += w * u;
      }
    }
  }
  out.best_action = game.null_action();
  for (int t = 0; t < game.size(2); ++t) {
    if (out.values[t] > out.values[out.best_action]) out.best_action = t;
  }
  out.best_value = out.values[out.best_action];
  return out;
}

std::vector<std::vector<int>> SimplexGrid(int dimension, int resolution) {
  if (dimension < 1 || resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid needs dimension >= 1 and resolution >= 1");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> point;
  GridRecurse(resolution, dimension, point, out);
  return out;
}

GridAuditResult GridAuditPlayer3(const ThreePlayerGame& game, int resolution,
                                 int64_t budget, int threads) {
  if (resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be >= 1");
  }
  const int n1 = game.size(0), n2 = game.size(1), n3 = game.size(2);
  // C(R + n - 1, n - 1) points per player, computed before enumerating.
  auto count = [resolution](int n) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), resolution + n - 1, n - 1);
    return c;
  };
  const BigInt pairs = count(n1) * count(n2);
  if (pairs > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "grid has " + pairs.get_str() + " strategy pairs, budget " +
                    std::to_string(budget));
  }
  const auto g1 = SimplexGrid(n1, resolution);
  const auto g2 = SimplexGrid(n2, resolution);

  // Scaled by resolution^2 throughout; integer grid numerators.
  struct Best {
    Rational value;
    int64_t i = -1, j = -1;
  };
  auto better = [](const Best& a, const Best& b) {
    if (b.i < 0) return true;
    if (a.value != b.value) return a.value < b.value;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };

  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min<int>(threads, static_cast<int>(g2.size()));
  std::vector<Best> local(threads);
  auto work = [&](int id) {
    std::vector<Rational> q(static_cast<size_t>(n1) * n3);
    std::vector<Rational> vals(n3);
    for (size_t j = id; j < g2.size(); j += threads) {
      for (int r = 0; r < n1; ++r) {
        for (int t = 0; t < n3; ++t) {
          Rational acc;
          for (int s = 0; s < n2; ++s) {
            if (g2[j][s] == 0) continue;
            const Rational& u = game.Payoff(2, r, s, t);
            if (!u.IsZero()) acc += Rational(g2[j][s]) * u;
          }
          q[r * n3 + t] = std::move(acc);
        }
      }
      for (size_t i = 0; i < g1.size(); ++i) {
        Rational best;
        for (int t = 0; t < n3; ++t) {
          Rational v;
          for (int r = 0; r < n1; ++r) {
            if (g1[i][r] != 0) v += Rational(g1[i][r]) * q[r * n3 + t];
          }
          if (t == 0 || v > best) best = std::move(v);
        }
        Best cand{std::move(best), static_cast<int64_t>(i),
                  static_cast<int64_t>(j)};
        if (better(cand, local[id])) local[id] = std::move(cand);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();

  Best best = local[0];
  for (int id = 1; id < threads; ++id) {
    if (better(local[id], best)) best = local[id];
  }
  GridAuditResult out;
  out.worst_case = best.value / Rational(int64_t{resolution} * resolution);
  out.p1 = GridStrategy(g1[best.i], resolution);
  out.p2 = GridStrategy(g2[best.j], resolution);
  out.points_per_player1 = static_cast<int64_t>(g1.size());
  out.points_per_player2 = static_cast<int64_t>(g2.size());
  return out;
}

Rational Player3Threshold(int n, int c_exponent) {
  if (n < 3 || c_exponent < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold needs n >= 3 and c >= 1");
  }
  const Rational denom = Rational(n - 2) * Pow(Rational(n), c_exponent - 1);
  return Rational(1) + Rational(1) / denom;
}

// ---------------------------------------------------------------------------
// Coloring leader.

ColoringLeaderGpa::ColoringLeaderGpa(Graph graph) : graph_(std::move(graph)) {
  ValidateGraph(graph_);
  if (graph_.n < 2) {
    throw Error(ErrorCode::kGraphTooSmall,
                "coloring game needs n >= 2, got " + std::to_string(graph_.n));
  }
}

int ColoringLeaderGpa::Score(History history) const {
  const int n = graph_.n;
  const int colored = std::min<int>(static_cast<int>(history.size()), n - 1);
  std::vector<int> color(n, -1);
  std::set<int> used;
  for (int v = 0; v < colored; ++v) {
    color[v] = history[v].col;
    if (color[v] == n - 1) return n;
    used.insert(color[v]);
  }
  for (auto [u, v] : graph_.edges) {
    if (color[u] >= 0 && color[u] == color[v]) return n;
  }
  return static_cast<int>(used.size());
}

MixedStrategy ColoringLeaderGpa::Strategy(const BimatrixGame& game,
                                          int horizon,
                                          History history) const {
  const int n = graph_.n;
  if (game.rows() != n || game.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coloring leader needs an n x n game");
  }
  if (static_cast<int>(history.size()) + 1 < horizon) {
    return MixedStrategy::Pure(n, 0);
  }
  const Rational low(Score(history), n);
  std::vector<Rational> w(n);
  w[0] += low;
  w[n - 1] += Rational(1) - low;
  return MixedStrategy(std::move(w));
}

ColoringInstance MakeColoringInstance(const Graph& graph) {
  auto leader = std::make_shared<const ColoringLeaderGpa>(graph);
  const int n = graph.n;
  RationalMatrix m1(n, std::vector<Rational>(n));
  RationalMatrix m2 = m1;
  m2[n - 1][n - 1] = Rational(1);
  return {ValidateGame(m1, m2), n, std::move(leader)};
}

}  // namespace stackgpa
