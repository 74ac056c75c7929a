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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd =
      std::string(STACKGPA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() /
           ("stackgpa_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

bool Has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_CASE("cli threat, solve and build") {
  Workspace ws;
  const std::string pd = ws.Write(
      "pd.json", R"({"M1":[["3/5",0],[1,"1/5"]],"M2":[["3/5",1],[0,"1/5"]]})");
  Run r = Cli("threat " + pd);
  CHECK(r.code == 0);
  CHECK(Has(r.out, "V = 1/5, x* = [0, 1]"));

  r = Cli("solve " + pd);
  CHECK(r.code == 0);
  CHECK(Has(r.out, "OPT_LP = 13/15"));

  r = Cli("build " + pd + " -T 11 -o " + ws.Path("gpa.json"));
  CHECK(r.code == 0);
  CHECK(Has(r.out, "N = 3, c = 3, r = 2"));
  CHECK(Has(r.out, "bound 2N/T = 6/11 (2r/T = 4/11)"));

  r = Cli("evaluate " + pd + " " + ws.Path("gpa.json"));
  CHECK(r.code == 0);
  CHECK(Has(r.out, "verdict: Obeys"));
  CHECK(Has(r.out, "gap = 26/165"));

  CHECK(Cli("build " + pd + " -T 3").code == 2);

  const std::string a = Cli("--json build " + pd + " -T 100 --sampled --seed 7").out;
  const std::string b = Cli("--json build " + pd + " -T 100 --sampled --seed 7").out;
  CHECK(a == b);
  CHECK(Has(a, "\"swaps\""));

  const std::string zero = ws.Write("zero.json", R"({"M1":[[0]],"M2":[[0]]})");
  CHECK(Has(Cli("threat " + zero).out, "V = 0"));
  CHECK(Has(Cli("solve " + zero).out, "OPT_LP = 0"));
}

TEST_CASE("cli errors and exit codes") {
  Workspace ws;
  const std::string bad = ws.Write("bad.json", R"({"M1":[["3/0"]],"M2":[[0]]})");
  const std::string cmd = std::string(STACKGPA_CLI) + " threat " + bad + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[1024];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(Has(out, "M1[1][1]"));

  CHECK(Cli("threat " + ws.Path("missing.json")).code == 2);
  CHECK(Cli("no-such-command").code == 2);

  const std::string pd = ws.Write(
      "pd.json", R"({"M1":[["3/5",0],[1,"1/5"]],"M2":[["3/5",1],[0,"1/5"]]})");
  const std::string reversed = ws.Write(
      "rev.json",
      R"({"kind":"prescribed","prescription":[[1,2],[1,2],[1,1],[1,1],[1,1],)"
      R"([2,1],[2,1],[2,1],[2,1],[2,1],[2,1]],"threat":["0","1"]})");
  Run r = Cli("evaluate " + pd + " " + reversed);
  CHECK(r.code == 4);
  CHECK(Has(r.out, "DeviationProfitableAt(3)"));

  const std::string uniform = ws.Write(
      "uniform.json",
      R"({"kind":"constant","side":"leader","strategy":["1/2","1/2"]})");
  CHECK(Cli("--budget 100 evaluate " + pd + " " + uniform + " -T 8").code ==
        3);
}

TEST_CASE("cli evaluate, simulate and regret") {
  Workspace ws;
  const std::string inev = ws.Write(
      "inev.json", R"({"M1":[[1,0],[0,0]],"M2":[["1/2",1],[0,0]]})");
  Cli("build " + inev + " -T 4 -o " + ws.Path("g.json"));
  Run r = Cli("evaluate " + inev + " " + ws.Path("g.json"));
  CHECK(Has(r.out, "gap = 1/4"));

  const std::string pd = ws.Write(
      "pd.json", R"({"M1":[["3/5",0],[1,"1/5"]],"M2":[["3/5",1],[0,"1/5"]]})");
  const std::string grim = ws.Write(
      "grim.json",
      R"({"kind":"grim_trigger","cooperate":[1,1],"punish_row":2})");
  r = Cli("simulate " + pd + " " + grim + " -T 5");
  CHECK(r.code == 0);
  CHECK(Has(r.out, "(1,1) (1,1) (1,1) (1,1) (1,2)"));
  CHECK(Has(r.out, "leader average = 12/25"));

  const std::string gen = ws.Write(
      "gen.json", R"({"M1":[["1/4","3/4"],[0,"1/2"]],"M2":[[1,0],[0,1]]})");
  std::string pairs;
  for (int t = 0; t < 16; ++t) pairs += std::string(t ? "," : "") + "[2,2]";
  const std::string tr = ws.Write("tr.json", R"({"pairs":[)" + pairs + "]}");
  r = Cli("regret " + gen + " " + tr);
  CHECK(Has(r.out, "per-round regret = 1/4"));
  r = Cli("--json regret " + gen + " " + tr);
  CHECK(Has(r.out, R"("total_regret": "4")"));
  CHECK(Has(r.out, R"("best_fixed_action": 1)"));
}

TEST_CASE("cli reduce and audit") {
  Workspace ws;
  const std::string c4 = ws.Write("c4.txt", "4 4\n1 2\n2 3\n3 4\n4 1\n");
  Run r = Cli("reduce " + c4 + " -o " + ws.Path("g3.json"));
  CHECK(r.code == 0);
  CHECK(Has(r.out, "strategy counts: 4, 4, 9"));
  CHECK(fs::exists(ws.Path("g3.json")));

  r = Cli("audit-vc " + c4);
  CHECK(Has(r.out, "balanced cover: 1 3"));
  CHECK(Has(r.out, "Player 3 best value = 1 (action 9, t_0)"));

  const std::string k4 =
      ws.Write("k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  r = Cli("--json audit-vc " + k4 + " --resolution 4 --c-exponent 5");
  CHECK(r.code == 0);
  CHECK(Has(r.out, R"("balanced_cover": null)"));
  CHECK(Has(r.out, R"("above_threshold": true)"));
  CHECK(r.out == Cli("--json audit-vc " + k4 +
                     " --resolution 4 --c-exponent 5").out);
}

}  // namespace
