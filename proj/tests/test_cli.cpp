/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run_raw(const std::string& cmd_line) {
  const std::string cmd = cmd_line + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 512> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome run(const std::string& args) { return run_raw(std::string(SIZEMATCH_BIN) + " " + args); }

Outcome run_err(const std::string& args) {
  const std::string cmd = std::string(SIZEMATCH_BIN) + " " + args + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 512> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::string squash(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\n'; });
  return s;
}

TEST(Cli, DiagramOfThePath) {
  const Outcome r = run("diagram " + fx("path_vertices.csv") + " " + fx("path_edges.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(squash(r.out), R"({"infinity_x":0.0,"points":[[0.0,3.0,1],[1.0,2.0,1]]})");
}

TEST(Cli, DiagramOfASingleVertex) {
  const Outcome r = run("diagram " + fx("single_vertex.csv") + " " + fx("single_edges.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(squash(r.out), R"({"infinity_x":2.5,"points":[]})");
}

TEST(Cli, DiagramCsv) {
  const Outcome r =
      run("diagram --format csv " + fx("path_vertices.csv") + " " + fx("path_edges.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "kind,x,y,multiplicity\ninf,0,inf,1\nproper,0,3,1\nproper,1,2,1\n");
}

TEST(Cli, MalformedCsvGivesExitTwoWithLine) {
  const Outcome r = run_err("diagram " + fx("malformed_vertices.csv") + " " + fx("path_edges.csv"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("malformed_vertices.csv:4"), std::string::npos) << r.out;
}

TEST(Cli, DisconnectedGraphGivesExitThree) {
  const Outcome r = run_err("diagram " + fx("path_vertices.csv") + " " + fx("disconnected_edges.csv"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("3 connected components"), std::string::npos) << r.out;
}

TEST(Cli, MissingFileGivesExitTwo) {
  EXPECT_EQ(run("diagram " + fx("nope.csv") + " " + fx("path_edges.csv")).code, 2);
}

TEST(Cli, DistIdenticalIsZero) {
  const Outcome r = run("dist " + fx("diagram_path.json") + " " + fx("diagram_path.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(squash(r.out), "0.0");
}

TEST(Cli, DistSinglePointAgainstEmpty) {
  const Outcome r = run("dist " + fx("diagram_13.json") + " " + fx("diagram_empty.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(squash(r.out), "1.0");
}

TEST(Cli, DistWithWitness) {
  const Outcome r =
      run("dist --witness " + fx("diagram_path.json") + " " + fx("diagram_shifted.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(squash(r.out).find(R"("distance":1.2)"), std::string::npos) << r.out;
  EXPECT_NE(squash(r.out).find(R"("left":[0.0,3.0],"right":[1.2,2.1])"), std::string::npos);
}

TEST(Cli, MalformedDiagramsGiveExitTwo) {
  EXPECT_EQ(run("dist " + fx("diagram_flipped.json") + " " + fx("diagram_empty.json")).code, 2);
  EXPECT_EQ(run("dist " + fx("diagram_mult0.json") + " " + fx("diagram_empty.json")).code, 2);
  EXPECT_EQ(run("dist " + fx("path_edges.csv") + " " + fx("diagram_empty.json")).code, 2);
}

TEST(Cli, BoundPathAgainstReversal) {
  const Outcome r = run("bound " + fx("path_vertices.csv") + " " + fx("path_edges.csv") + " " +
                    fx("path_reversed_vertices.csv") + " " + fx("path_edges.csv"));
  EXPECT_EQ(r.code, 0);
  const std::string s = squash(r.out);
  EXPECT_NE(s.find(R"("d_match":0.0)"), std::string::npos) << r.out;
  EXPECT_NE(s.find(R"("exact_pseudo_distance":0.0)"), std::string::npos) << r.out;
  EXPECT_NE(s.find(R"("chain_holds":true)"), std::string::npos) << r.out;
}

TEST(Cli, RealizeWritesFieldsAndVerification) {
  const Outcome r = run("realize --refine 2 " + fx("diagram_13.json") + " " + fx("diagram_empty.json"));
  EXPECT_EQ(r.code, 0);
  const std::string s = squash(r.out);
  EXPECT_NE(s.find(R"("ok":true)"), std::string::npos) << r.out;
  EXPECT_NE(s.find(R"("y_breaks_per_column")"), std::string::npos);
  EXPECT_NE(s.find(R"("max_gap":1.0)"), std::string::npos);
}

TEST(Cli, Stability) {
  const Outcome r = run("stability --eps 0.05 " + fx("path_vertices.csv") + " " +
                    fx("path_edges.csv") + " " + fx("path_perturbed.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(squash(r.out).find(R"("holds":true)"), std::string::npos) << r.out;
  const Outcome tight = run("stability --eps 0.01 " + fx("path_vertices.csv") + " " +
                        fx("path_edges.csv") + " " + fx("path_perturbed.csv"));
  EXPECT_EQ(tight.code, 3);
}

TEST(Cli, SelftestSeedIsDeterministicAndEnvFallback) {
  const std::string args = " selftest --scale 0.05 --suite realization --suite stability";
  // Timings vary between runs; everything else must not.
  auto strip_times = [](const std::string& s) {
    return std::regex_replace(s, std::regex(", [0-9.e+-]+ s\\)"), ")");
  };
  const Outcome a = run(args + " --seed 5");
  const Outcome b = run(args + " --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("seed 5\n", 0), 0u) << a.out;
  EXPECT_EQ(strip_times(a.out), strip_times(b.out));

  const std::string bin = SIZEMATCH_BIN;
  const Outcome env = run_raw("SIZEMATCH_SEED=5 " + bin + args);
  EXPECT_EQ(strip_times(env.out), strip_times(a.out));
  const Outcome flag_wins = run_raw("SIZEMATCH_SEED=5 " + bin + args + " --seed 6");
  EXPECT_EQ(flag_wins.out.rfind("seed 6\n", 0), 0u) << flag_wins.out;
}

TEST(Cli, SelftestZeroCapSkipsOracles) {
  const Outcome r = run("selftest --scale 0.05 --cap 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP  matching-oracle"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SKIP  bound-chain"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS  realization"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsGiveExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("dist only_one.json").code, 2);
  EXPECT_EQ(run("diagram --format xml a b").code, 2);
}

}  // namespace
