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

#include "stackgpa/io.h"

#include <string>
#include <utility>
#include <vector>

#include "stackgpa/errors.h"

namespace stackgpa {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int IntFromJson(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an integer");
  const int64_t v = j.get<int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) Fail(where, "integer out of range");
  return static_cast<int>(v);
}

// 1-based index on the wire.
int IndexFromJson(const Json& j, const std::string& where) {
  const int v = IntFromJson(j, where);
  if (v < 1) Fail(where, "indices are 1-based");
  return v - 1;
}

ActionPair PairFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) Fail(where, "expected [row, col]");
  return {IndexFromJson(j[0], where + "[1]"),
          IndexFromJson(j[1], where + "[2]")};
}

Json PairToJson(ActionPair p) { return Json::array({p.row + 1, p.col + 1}); }

RationalMatrix MatrixFromJson(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) Fail(name, "expected a nonempty matrix");
  RationalMatrix m;
  for (size_t r = 0; r < j.size(); ++r) {
    const std::string row_name = name + "[" + std::to_string(r + 1) + "]";
    if (!j[r].is_array()) Fail(row_name, "expected an array");
    std::vector<Rational> row;
    for (size_t c = 0; c < j[r].size(); ++c) {
      row.push_back(RationalFromJson(
          j[r][c], row_name + "[" + std::to_string(c + 1) + "]"));
    }
    m.push_back(std::move(row));
  }
  return m;
}

Json MatrixToJson(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(RationalToJson(v));
    out.push_back(std::move(r));
  }
  return out;
}

PlayerSide SideFromJson(const Json& j) {
  const Json& s = Field(j, "side", "gpa");
  if (!s.is_string()) Fail("gpa.side", "expected a string");
  try {
    return ParsePlayerSide(s.get<std::string>());
  } catch (const Error& e) {
    Fail("gpa.side", e.what());
  }
}

}  // namespace

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json RationalToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (!j.is_string()) Fail(where, "expected an integer or \"p/q\" string");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const Error& e) {
    Fail(where, e.what());
  }
}

Json MixedStrategyToJson(const MixedStrategy& s) {
  Json out = Json::array();
  for (const Rational& w : s.weights()) out.push_back(RationalToJson(w));
  return out;
}

MixedStrategy MixedStrategyFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) Fail(where, "expected a nonempty array");
  std::vector<Rational> w;
  for (size_t i = 0; i < j.size(); ++i) {
    w.push_back(
        RationalFromJson(j[i], where + "[" + std::to_string(i + 1) + "]"));
  }
  try {
    return MixedStrategy(std::move(w));
  } catch (const Error& e) {
    Fail(where, e.what());
  }
}

Json GameToJson(const BimatrixGame& game) {
  Json out;
  out["M1"] = MatrixToJson(game.LeaderMatrix());
  out["M2"] = MatrixToJson(game.FollowerMatrix());
  return out;
}

BimatrixGame GameFromJson(const Json& j) {
  RationalMatrix m1 = MatrixFromJson(Field(j, "M1", "game"), "M1");
  RationalMatrix m2 = MatrixFromJson(Field(j, "M2", "game"), "M2");
  return ValidateGame(m1, m2);
}

Json PairsToJson(const std::vector<ActionPair>& pairs) {
  Json out = Json::array();
  for (ActionPair p : pairs) out.push_back(PairToJson(p));
  return out;
}

std::vector<ActionPair> PairsFromJson(const Json& j,
                                      const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array of pairs");
  std::vector<ActionPair> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(PairFromJson(j[i], where + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

Json TranscriptToJson(const Transcript& transcript) {
  Json out;
  out["pairs"] = PairsToJson(transcript.pairs);
  return out;
}

Transcript TranscriptFromJson(const Json& j) {
  return {PairsFromJson(Field(j, "pairs", "transcript"), "pairs")};
}

Json GpaToJson(const GamePlayingAlgorithm& gpa) {
  Json out;
  out["kind"] = gpa.kind();
  if (auto* p = dynamic_cast<const PrescribedSequenceGpa*>(&gpa)) {
    out["prescription"] = PairsToJson(p->prescription());
    out["threat"] = MixedStrategyToJson(p->threat());
  } else if (auto* g = dynamic_cast<const GrimTriggerGpa*>(&gpa)) {
    out["cooperate"] = PairToJson(g->cooperate());
    out["punish_row"] = g->punish_row() + 1;
  } else if (auto* t = dynamic_cast<const TwoPhaseGpa*>(&gpa)) {
    out["cooperate"] = PairToJson(t->cooperate());
    out["defect_row"] = t->defect_row() + 1;
    out["phase1_len"] = t->phase1_len();
  } else if (auto* mw = dynamic_cast<const MultiplicativeWeightsGpa*>(&gpa)) {
    out["side"] = PlayerSideName(mw->side());
    out["learning_rate"] = RationalToJson(mw->learning_rate());
  } else if (auto* l = dynamic_cast<const LookupTableGpa*>(&gpa)) {
    out["side"] = PlayerSideName(l->side());
    Json table = Json::array();
    for (const auto& [history, action] : l->table()) {
      Json entry;
      entry["history"] = PairsToJson(history);
      entry["action"] = action + 1;
      table.push_back(std::move(entry));
    }
    out["table"] = std::move(table);
  } else if (auto* c = dynamic_cast<const ConstantGpa*>(&gpa)) {
    out["side"] = PlayerSideName(c->side());
    out["strategy"] = MixedStrategyToJson(c->strategy());
  } else if (auto* s = dynamic_cast<const SequenceGpa*>(&gpa)) {
    out["side"] = PlayerSideName(s->side());
    Json actions = Json::array();
    for (int a : s->actions()) actions.push_back(a + 1);
    out["actions"] = std::move(actions);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "GPA kind \"" + gpa.kind() + "\" has no serialization");
  }
  return out;
}

std::shared_ptr<const GamePlayingAlgorithm> GpaFromJson(const Json& j) {
  const Json& kind_json = Field(j, "kind", "gpa");
  if (!kind_json.is_string()) Fail("gpa.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "prescribed") {
      auto pairs =
          PairsFromJson(Field(j, "prescription", "gpa"), "prescription");
      auto threat = MixedStrategyFromJson(Field(j, "threat", "gpa"), "threat");
      return std::make_shared<PrescribedSequenceGpa>(std::move(pairs),
                                                     std::move(threat));
    }
    if (kind == "grim_trigger") {
      return std::make_shared<GrimTriggerGpa>(
          PairFromJson(Field(j, "cooperate", "gpa"), "cooperate"),
          IndexFromJson(Field(j, "punish_row", "gpa"), "punish_row"));
    }
    if (kind == "two_phase") {
      return std::make_shared<TwoPhaseGpa>(
          PairFromJson(Field(j, "cooperate", "gpa"), "cooperate"),
          IndexFromJson(Field(j, "defect_row", "gpa"), "defect_row"),
          IntFromJson(Field(j, "phase1_len", "gpa"), "phase1_len"));
    }
    if (kind == "mw") {
      return std::make_shared<MultiplicativeWeightsGpa>(
          SideFromJson(j),
          RationalFromJson(Field(j, "learning_rate", "gpa"), "learning_rate"));
    }
    if (kind == "lookup") {
      const Json& table = Field(j, "table", "gpa");
      if (!table.is_array()) Fail("table", "expected an array");
      std::map<HistoryKey, int> entries;
      for (size_t i = 0; i < table.size(); ++i) {
        const std::string where = "table[" + std::to_string(i + 1) + "]";
        HistoryKey h =
            PairsFromJson(Field(table[i], "history", where), where + ".history");
        int a = IndexFromJson(Field(table[i], "action", where),
                              where + ".action");
        if (!entries.emplace(std::move(h), a).second) {
          Fail(where, "duplicate history");
        }
      }
      return std::make_shared<LookupTableGpa>(SideFromJson(j),
                                              std::move(entries));
    }
    if (kind == "constant") {
      return std::make_shared<ConstantGpa>(
          SideFromJson(j),
          MixedStrategyFromJson(Field(j, "strategy", "gpa"), "strategy"));
    }
    if (kind == "sequence") {
      const Json& a = Field(j, "actions", "gpa");
      if (!a.is_array()) Fail("actions", "expected an array");
      std::vector<int> actions;
      for (size_t i = 0; i < a.size(); ++i) {
        actions.push_back(
            IndexFromJson(a[i], "actions[" + std::to_string(i + 1) + "]"));
      }
      return std::make_shared<SequenceGpa>(SideFromJson(j),
                                           std::move(actions));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, std::string("gpa: ") + e.what());
  }
  Fail("gpa.kind", "unknown kind \"" + kind + "\"");
}

Json RegretToJson(const RegretReport& report) {
  Json out;
  out["total_regret"] = RationalToJson(report.total_regret);
  out["best_fixed_action"] = report.best_fixed_action + 1;
  out["realized_total"] = RationalToJson(report.realized_total);
  return out;
}

Json BestResponseToJson(const BestResponseResult& result,
                        const std::map<HistoryKey, int>& on_path) {
  Json out;
  out["follower_value"] = RationalToJson(result.follower_value);
  out["leader_value"] = RationalToJson(result.leader_value);
  out["states"] = result.states;
  Json policy = Json::array();
  for (const auto& [history, action] : on_path) {
    Json entry;
    entry["history"] = PairsToJson(history);
    entry["action"] = action + 1;
    policy.push_back(std::move(entry));
  }
  out["on_path_policy"] = std::move(policy);
  return out;
}

Json ThreePlayerGameToJson(const ThreePlayerGame& game) {
  Json out;
  out["sizes"] = Json::array({game.size(0), game.size(1), game.size(2)});
  out["null_action"] = game.null_action() + 1;
  for (int p = 0; p < 3; ++p) {
    Json tensor = Json::array();
    for (int r = 0; r < game.size(0); ++r) {
      Json plane = Json::array();
      for (int s = 0; s < game.size(1); ++s) {
        Json line = Json::array();
        for (int t = 0; t < game.size(2); ++t) {
          line.push_back(RationalToJson(game.Payoff(p, r, s, t)));
        }
        plane.push_back(std::move(line));
      }
      tensor.push_back(std::move(plane));
    }
    out["mu" + std::to_string(p + 1)] = std::move(tensor);
  }
  return out;
}

}  // namespace stackgpa
