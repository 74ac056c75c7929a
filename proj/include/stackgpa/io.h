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

// JSON encodings. Indices are 1-based on the wire, rationals are strings
// "p" or "p/q" (integers are also accepted on input).

#ifndef STACKGPA_IO_H_
#define STACKGPA_IO_H_

#include <map>
#include <memory>
#include <string>

#include "json.hpp"
#include "stackgpa/game.h"
#include "stackgpa/gpa.h"
#include "stackgpa/hardness.h"
#include "stackgpa/oracle.h"
#include "stackgpa/rational.h"

namespace stackgpa {

using Json = nlohmann::ordered_json;

// Throws kParse with the parser's position on malformed text.
Json ParseJsonText(const std::string& text);

Json RationalToJson(const Rational& r);
// `where` names the value in error messages, e.g. "M1[2][3]".
Rational RationalFromJson(const Json& j, const std::string& where);

Json MixedStrategyToJson(const MixedStrategy& s);
MixedStrategy MixedStrategyFromJson(const Json& j, const std::string& where);

Json GameToJson(const BimatrixGame& game);
BimatrixGame GameFromJson(const Json& j);

Json PairsToJson(const std::vector<ActionPair>& pairs);
std::vector<ActionPair> PairsFromJson(const Json& j, const std::string& where);

Json TranscriptToJson(const Transcript& transcript);
Transcript TranscriptFromJson(const Json& j);

// Supports prescribed, grim_trigger, two_phase, mw, lookup, constant and
// sequence GPAs. Throws kInvalidArgument for other kinds.
Json GpaToJson(const GamePlayingAlgorithm& gpa);
std::shared_ptr<const GamePlayingAlgorithm> GpaFromJson(const Json& j);

Json RegretToJson(const RegretReport& report);

// Values plus the on-path part of the policy.
Json BestResponseToJson(const BestResponseResult& result,
                        const std::map<HistoryKey, int>& on_path);

Json ThreePlayerGameToJson(const ThreePlayerGame& game);

}  // namespace stackgpa

#endif  // STACKGPA_IO_H_
