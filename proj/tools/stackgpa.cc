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

// Command-line front end. Exit codes: 0 ok, 2 input error, 3 budget
// exceeded, 4 verification failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stackgpa/errors.h"
#include "stackgpa/game.h"
#include "stackgpa/gpa.h"
#include "stackgpa/hardness.h"
#include "stackgpa/io.h"
#include "stackgpa/oracle.h"
#include "stackgpa/stackelberg.h"

namespace stackgpa {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct RunConfig {
  bool json = false;
  int64_t budget = kDefaultStateBudget;
  std::string game_path;
  std::string path2;  // GPA, transcript or graph, depending on command
  std::string follower_path;
  std::string output_path;
  int horizon = 0;
  bool sampled = false;
  uint64_t seed = 0;
  std::string side = "leader";
  int resolution = 0;
  int c_exponent = 5;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

BimatrixGame LoadGame(const std::string& path) {
  try {
    return GameFromJson(ParseJsonText(ReadFile(path)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::shared_ptr<const GamePlayingAlgorithm> LoadGpa(const std::string& path) {
  try {
    return GpaFromJson(ParseJsonText(ReadFile(path)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string Vector(const MixedStrategy& s) {
  std::string out = "[";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].ToString();
  }
  return out + "]";
}

std::string Pair(ActionPair p) {
  return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) +
         ")";
}

void PrintJson(const Json& j) { std::cout << j.dump(2) << "\n"; }

void RequireHorizon(const RunConfig& cfg) {
  if (cfg.horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument, "T must be >= 1 (use -T)");
  }
}

int CmdThreat(const RunConfig& cfg) {
  const BimatrixGame game = LoadGame(cfg.game_path);
  const ThreatResult t = Threat(game);
  if (cfg.json) {
    Json out;
    out["V"] = RationalToJson(t.value);
    out["x_star"] = MixedStrategyToJson(t.strategy);
    PrintJson(out);
  } else {
    std::cout << "V = " << t.value << ", x* = " << Vector(t.strategy) << "\n";
  }
  return kExitOk;
}

int CmdSolve(const RunConfig& cfg) {
  const BimatrixGame game = LoadGame(cfg.game_path);
  const StackelbergLpResult lp = StackelbergLp(game);
  const FollowerOptimum best = MaxFollowerPair(game);
  if (cfg.json) {
    Json out;
    out["OPT_LP"] = RationalToJson(lp.opt);
    out["V"] = RationalToJson(lp.threat.value);
    Json alpha = Json::array();
    for (int k = 0; k < game.num_pairs(); ++k) {
      if (lp.alpha[k].IsZero()) continue;
      Json e;
      ActionPair p = game.PairAt(k);
      e["pair"] = Json::array({p.row + 1, p.col + 1});
      e["weight"] = RationalToJson(lp.alpha[k]);
      alpha.push_back(std::move(e));
    }
    out["alpha"] = std::move(alpha);
    out["max_follower_pair"] =
        Json::array({best.pair.row + 1, best.pair.col + 1});
    out["m"] = RationalToJson(best.value);
    PrintJson(out);
  } else {
    std::cout << "OPT_LP = " << lp.opt << "\nV = " << lp.threat.value
              << "\nalpha support:\n";
    for (int k = 0; k < game.num_pairs(); ++k) {
      if (!lp.alpha[k].IsZero()) {
        std::cout << "  " << Pair(game.PairAt(k)) << " " << lp.alpha[k]
                  << "\n";
      }
    }
    std::cout << "max follower pair " << Pair(best.pair) << ", m = "
              << best.value << "\n";
  }
  return kExitOk;
}

int CmdBuild(const RunConfig& cfg) {
  RequireHorizon(cfg);
  const BimatrixGame game = LoadGame(cfg.game_path);
  Json report;
  std::shared_ptr<const PrescribedSequenceGpa> gpa;
  std::ostringstream table;
  if (!cfg.sampled) {
    DeterministicConstruction c = BuildDeterministicGpa(game, cfg.horizon);
    gpa = c.gpa;
    const Rational t(cfg.horizon);
    const Rational bound = Rational(2) * Rational(c.cycle.cycle_length, 1) / t;
    const Rational r_bound = Rational(2 * c.cycle.remainder) / t;
    report["variant"] = "deterministic";
    report["N"] = c.cycle.cycle_length.get_str();
    report["c"] = c.cycle.repetitions;
    report["r"] = c.cycle.remainder;
    report["bound_2N_over_T"] = RationalToJson(bound);
    report["bound_2r_over_T"] = RationalToJson(r_bound);
    table << "N = " << c.cycle.cycle_length << ", c = " << c.cycle.repetitions
          << ", r = " << c.cycle.remainder << "\nbound 2N/T = " << bound
          << " (2r/T = " << r_bound << ")\n";
  } else {
    SampledConstruction c = BuildSampledGpa(game, cfg.horizon, cfg.seed);
    gpa = c.gpa;
    const double approx =
        4.0 * std::sqrt(10.0 * game.granularity().get_d()) /
        std::pow(static_cast<double>(cfg.horizon), 0.25);
    std::ostringstream approx_text;
    approx_text << std::setprecision(6) << approx;
    report["variant"] = "sampled";
    report["seed"] = cfg.seed;
    report["swaps"] = c.swaps;
    report["degenerate"] = c.degenerate;
    report["bound_approx"] = approx_text.str();
    table << "seed = " << cfg.seed << ", swaps = " << c.swaps
          << (c.degenerate ? " (m = V, constant prescription)" : "")
          << "\nbound 4*sqrt(10A)/T^0.25 ~= " << approx_text.str()
          << " (approximate)\n";
  }
  const Json gpa_json = GpaToJson(*gpa);
  if (!cfg.output_path.empty()) WriteFile(cfg.output_path, gpa_json.dump(2) + "\n");
  const AveragePayoff avg = AveragePayoffs(game, gpa->prescription());
  report["obedient_leader_average"] = RationalToJson(avg.leader);
  report["obedient_follower_average"] = RationalToJson(avg.follower);
  if (cfg.json) {
    if (cfg.output_path.empty()) report["gpa"] = gpa_json;
    PrintJson(report);
  } else {
    std::cout << table.str() << "prescription:";
    for (ActionPair p : gpa->prescription()) std::cout << " " << Pair(p);
    std::cout << "\nthreat = " << Vector(gpa->threat())
              << "\nobedient leader average = " << avg.leader << "\n";
    if (!cfg.output_path.empty()) {
      std::cout << "wrote " << cfg.output_path << "\n";
    }
  }
  return kExitOk;
}

int CmdEvaluate(const RunConfig& cfg) {
  const BimatrixGame game = LoadGame(cfg.game_path);
  auto gpa = LoadGpa(cfg.path2);
  auto* prescribed = dynamic_cast<const PrescribedSequenceGpa*>(gpa.get());
  int horizon = cfg.horizon;
  if (horizon == 0 && prescribed) horizon = prescribed->horizon();
  if (horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument, "T must be >= 1 (use -T)");
  }
  std::optional<PrescriptionVerdict> verdict;
  if (prescribed) {
    if (prescribed->horizon() != horizon) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prescription length differs from T");
    }
    verdict = VerifyPrescription(*prescribed, game);
  }
  BestResponseResult br;
  try {
    br = BestResponse(*gpa, game, horizon, cfg.budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kStateSpaceExceeded) throw;
    throw Error(e.code(), std::string(e.what()) +
                              "; try a smaller T or a larger --budget");
  }
  const Rational t(horizon);
  const Rational opt = StackelbergLp(game).opt;
  const Rational leader_avg = br.leader_value / t;
  const Rational gap = opt - leader_avg;
  if (cfg.json) {
    Json out;
    out["T"] = horizon;
    if (verdict) {
      out["verdict"] = verdict->obeys ? "Obeys" : "DeviationProfitableAt";
      if (!verdict->obeys) out["round"] = verdict->round;
    }
    out["leader_average"] = RationalToJson(leader_avg);
    out["follower_average"] = RationalToJson(br.follower_value / t);
    out["OPT_LP"] = RationalToJson(opt);
    out["gap"] = RationalToJson(gap);
    out["best_response"] =
        BestResponseToJson(br, OnPathPolicy(*gpa, game, horizon, br));
    PrintJson(out);
  } else {
    if (verdict) {
      std::cout << "verdict: "
                << (verdict->obeys ? std::string("Obeys")
                                   : "DeviationProfitableAt(" +
                                         std::to_string(verdict->round) + ")")
                << "\n";
    }
    std::cout << "leader average = " << leader_avg
              << "\nfollower average = " << br.follower_value / t
              << "\nOPT_LP = " << opt << "\ngap = " << gap
              << "\nstates = " << br.states << "\n";
  }
  return verdict && !verdict->obeys ? kExitVerification : kExitOk;
}

int CmdSimulate(const RunConfig& cfg) {
  RequireHorizon(cfg);
  const BimatrixGame game = LoadGame(cfg.game_path);
  auto leader = LoadGpa(cfg.path2);
  std::shared_ptr<const GamePlayingAlgorithm> follower;
  if (!cfg.follower_path.empty()) {
    follower = LoadGpa(cfg.follower_path);
  } else {
    follower = FollowerPolicyGpa(
        BestResponse(*leader, game, cfg.horizon, cfg.budget));
  }
  const Transcript tr =
      Simulate(*leader, *follower, game, cfg.horizon, cfg.seed);
  const AveragePayoff avg = AveragePayoffs(game, tr);
  if (cfg.json) {
    Json out = TranscriptToJson(tr);
    out["leader_average"] = RationalToJson(avg.leader);
    out["follower_average"] = RationalToJson(avg.follower);
    PrintJson(out);
  } else {
    std::cout << "transcript:";
    for (ActionPair p : tr.pairs) std::cout << " " << Pair(p);
    std::cout << "\nleader average = " << avg.leader
              << "\nfollower average = " << avg.follower << "\n";
  }
  if (!cfg.output_path.empty()) {
    WriteFile(cfg.output_path, TranscriptToJson(tr).dump(2) + "\n");
  }
  return kExitOk;
}

int CmdRegret(const RunConfig& cfg) {
  const BimatrixGame game = LoadGame(cfg.game_path);
  Transcript tr;
  try {
    tr = TranscriptFromJson(ParseJsonText(ReadFile(cfg.path2)));
  } catch (const Error& e) {
    throw Error(e.code(), cfg.path2 + ": " + e.what());
  }
  for (ActionPair p : tr.pairs) {
    if (!game.Contains(p)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "transcript pair " + Pair(p) + " outside the game");
    }
  }
  const RegretReport r = ExternalRegret(game, tr.pairs, ParsePlayerSide(cfg.side));
  const Rational per_round = r.total_regret / Rational(tr.horizon());
  if (cfg.json) {
    PrintJson(RegretToJson(r));
  } else {
    std::cout << "total regret = " << r.total_regret
              << "\nper-round regret = " << per_round
              << "\nbest fixed action = " << r.best_fixed_action + 1
              << "\nrealized total = " << r.realized_total << "\n";
  }
  return kExitOk;
}

Graph LoadGraph(const std::string& path) {
  try {
    return ParseEdgeList(ReadFile(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

int CmdReduce(const RunConfig& cfg) {
  const Graph graph = LoadGraph(cfg.path2);
  const ThreePlayerGame game = ReduceGraph(graph);
  const Json j = ThreePlayerGameToJson(game);
  if (!cfg.output_path.empty()) WriteFile(cfg.output_path, j.dump(2) + "\n");
  if (cfg.json) {
    if (cfg.output_path.empty()) {
      PrintJson(j);
    } else {
      Json out;
      out["sizes"] = j["sizes"];
      out["null_action"] = j["null_action"];
      PrintJson(out);
    }
  } else {
    std::cout << "strategy counts: " << game.size(0) << ", " << game.size(1)
              << ", " << game.size(2) << "\nnull action t_0 = "
              << game.null_action() + 1 << "\n";
    if (!cfg.output_path.empty()) {
      std::cout << "wrote " << cfg.output_path << "\n";
    }
  }
  return kExitOk;
}

int CmdAuditVc(const RunConfig& cfg) {
  const Graph graph = LoadGraph(cfg.path2);
  const ThreePlayerGame game = ReduceGraph(graph);
  Json out;
  std::ostringstream table;
  const auto cover = BalancedVertexCover(graph);
  if (cover) {
    Json c = Json::array();
    for (int v : *cover) c.push_back(v + 1);
    out["balanced_cover"] = std::move(c);
    auto [p1, p2] = CoverStrategies(graph, *cover);
    const Player3AuditResult a = Player3Audit(game, p1, p2);
    out["cover_audit"] = {{"best_value", RationalToJson(a.best_value)},
                          {"best_action", a.best_action + 1},
                          {"is_null_action",
                           a.best_action == game.null_action()}};
    table << "balanced cover:";
    for (int v : *cover) table << " " << v + 1;
    table << "\ncover audit: Player 3 best value = " << a.best_value
          << " (action " << a.best_action + 1
          << (a.best_action == game.null_action() ? ", t_0" : "") << ")\n";
  } else {
    out["balanced_cover"] = nullptr;
    table << "no balanced vertex cover\n";
  }
  if (cfg.resolution > 0) {
    const GridAuditResult g = GridAuditPlayer3(game, cfg.resolution);
    const Rational threshold = Player3Threshold(graph.n, cfg.c_exponent);
    const bool above = g.worst_case > threshold;
    out["grid_audit"] = {{"resolution", cfg.resolution},
                         {"c_exponent", cfg.c_exponent},
                         {"worst_case", RationalToJson(g.worst_case)},
                         {"threshold", RationalToJson(threshold)},
                         {"above_threshold", above},
                         {"argmin_p1", MixedStrategyToJson(g.p1)},
                         {"argmin_p2", MixedStrategyToJson(g.p2)}};
    table << "grid audit (resolution " << cfg.resolution
          << ", empirical): worst case = " << g.worst_case << ", threshold = "
          << threshold << (above ? " (above)" : " (not above)") << "\n";
  }
  if (cfg.json) {
    PrintJson(out);
  } else {
    std::cout << table.str();
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStateSpaceExceeded:
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitInput;
  }
}

}  // namespace
}  // namespace stackgpa

int main(int argc, char** argv) {
  using namespace stackgpa;
  CLI::App app{"Approximate Stackelberg leader algorithms for repeated games"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Emit JSON instead of tables");
  app.add_option("--budget", cfg.budget, "Oracle state budget")
      ->check(CLI::PositiveNumber);

  auto add_game = [&cfg](CLI::App* sub) {
    sub->add_option("game", cfg.game_path, "Game JSON file")->required();
  };
  auto add_t = [&cfg](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-T,--horizon", cfg.horizon, "Horizon T")
                  ->check(CLI::PositiveNumber);
    if (required) o->required();
  };

  auto* threat = app.add_subcommand("threat", "Threat value V and x*");
  add_game(threat);
  auto* solve = app.add_subcommand("solve", "Stackelberg LP");
  add_game(solve);
  auto* build = app.add_subcommand("build", "Construct a leader GPA");
  add_game(build);
  add_t(build, true);
  build->add_flag("--sampled", cfg.sampled, "Sampled construction");
  build->add_option("--seed", cfg.seed, "Seed for --sampled");
  build->add_option("-o,--output", cfg.output_path, "GPA output file");
  auto* evaluate = app.add_subcommand("evaluate", "Verify and best-respond");
  add_game(evaluate);
  evaluate->add_option("gpa", cfg.path2, "Leader GPA file")->required();
  add_t(evaluate, false);
  auto* simulate = app.add_subcommand("simulate", "Play two GPAs");
  add_game(simulate);
  simulate->add_option("leader", cfg.path2, "Leader GPA file")->required();
  simulate->add_option("--follower", cfg.follower_path,
                       "Follower GPA file (default: oracle best response)");
  add_t(simulate, true);
  simulate->add_option("--seed", cfg.seed, "Seed");
  simulate->add_option("-o,--output", cfg.output_path, "Transcript file");
  auto* regret = app.add_subcommand("regret", "External regret");
  add_game(regret);
  regret->add_option("transcript", cfg.path2, "Transcript file")->required();
  regret->add_option("--side", cfg.side, "leader or follower")
      ->check(CLI::IsMember({"leader", "follower"}));
  auto* reduce = app.add_subcommand("reduce", "Three-player reduction");
  reduce->add_option("graph", cfg.path2, "Edge-list file")->required();
  reduce->add_option("-o,--output", cfg.output_path, "Output JSON file");
  auto* audit = app.add_subcommand("audit-vc", "Vertex-cover audits");
  audit->add_option("graph", cfg.path2, "Edge-list file")->required();
  audit->add_option("--resolution", cfg.resolution, "Grid resolution")
      ->check(CLI::PositiveNumber);
  audit->add_option("--c-exponent", cfg.c_exponent, "Threshold exponent c")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*threat) return CmdThreat(cfg);
    if (*solve) return CmdSolve(cfg);
    if (*build) return CmdBuild(cfg);
    if (*evaluate) return CmdEvaluate(cfg);
    if (*simulate) return CmdSimulate(cfg);
    if (*regret) return CmdRegret(cfg);
    if (*reduce) return CmdReduce(cfg);
    if (*audit) return CmdAuditVc(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitInput;
}
