// Copyright 2026 The powerlat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace powerlat {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string Data(const std::string& name) { return std::string(POWERLAT_TEST_DATA) + "/" + name; }

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "powerlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Case {
  std::vector<std::string> args;
  int code;
};

class ExitCodeTest : public ::testing::TestWithParam<Case> {};

TEST_P(ExitCodeTest, Matches) {
  auto args = GetParam().args;
  for (auto& a : args) {
    if (a.ends_with(".json")) a = Data(a);
  }
  const auto r = Invoke(args);
  EXPECT_EQ(r.code, GetParam().code) << r.out << r.err;
  if (r.code == 2) {
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Matrix, ExitCodeTest,
    ::testing::Values(
        Case{{"lattice", "verify", "boolean3.json"}, 0}, Case{{"lattice", "verify", "rank_mismatch.json"}, 1},
        Case{{"lattice", "verify", "q8_subgroups.json"}, 1}, Case{{"lattice", "verify", "--laws", "multiset22.json"}, 0},
        Case{{"lattice", "info", "--elements", "multiset22.json"}, 0}, Case{{"lattice", "verify", "not_json.json"}, 2},
        Case{{"lattice", "verify", "missing.json"}, 2}, Case{{"complex", "shell", "triangle_boundary.json"}, 0},
        Case{{"complex", "shell", "--search", "triangle_boundary.json"}, 0},
        Case{{"complex", "shell", "disjoint_edges.json"}, 1}, Case{{"complex", "shell", "--search", "disjoint_edges.json"}, 1},
        Case{{"complex", "shell", "mixed_ranks.json"}, 1}, Case{{"complex", "shell", "empty_complex.json"}, 2},
        Case{{"complex", "order", "--homology", "triangle_boundary.json"}, 0},
        Case{{"complex", "homology", "triangle_simplicial.json"}, 0}, Case{{"complex", "sphere", "boolean3.json"}, 0},
        Case{{"matroid", "verify", "uniform2_multiset22.json"}, 0},
        Case{{"matroid", "verify", "broken_independents.json"}, 1},
        Case{{"matroid", "bases", "uniform2_multiset22.json"}, 0},
        Case{{"matroid", "shelling", "uniform2_multiset22.json"}, 0},
        Case{{"matroid", "exchange", "uniform2_multiset22.json"}, 0}, Case{{"graph", "matroid", "triangle_graph.json"}, 0},
        Case{{"sr", "ideal", "mc_below_ceiling.json"}, 0}, Case{{"sr", "section-check", "mc_below_ceiling.json"}, 0},
        Case{{"sr", "section-check", "mc_ceiling.json"}, 1}, Case{{"sr", "polarize", "mc_ceiling.json"}, 0},
        Case{{"sr", "shell-polarized", "mc_below_ceiling.json"}, 0}, Case{{"sr", "ideal", "mc_top.json"}, 2},
        Case{{"export", "--format", "m2", "mc_ceiling.json"}, 0}, Case{{"export", "--format", "bogus", "mc_ceiling.json"}, 2},
        Case{{"bogus"}, 2}, Case{{}, 2},
        Case{{"--atom-order", "x,y", "complex", "shell", "--rank-lex", "triangle_boundary.json"}, 2}));

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(Invoke({"--help"}).code, 0); }

TEST(CliTest, JsonReportShape) {
  const auto r = Invoke({"sr", "section-check", Data("mc_ceiling.json")});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "sr section-check");
  EXPECT_FALSE(j.at("holds").get<bool>());
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_TRUE(j.at("witnesses").dump().find("x_2^4") != std::string::npos);
}

TEST(CliTest, RankMismatchWitness) {
  const auto j = nlohmann::json::parse(Invoke({"lattice", "verify", Data("rank_mismatch.json")}).out);
  EXPECT_FALSE(j.at("verdicts").at("valuation_rank").get<bool>());
  EXPECT_TRUE(j.at("verdicts").at("unique_powers").get<bool>());
}

TEST(CliTest, TimingsAndText) {
  const auto timed = nlohmann::json::parse(Invoke({"--timings", "lattice", "verify", Data("boolean3.json")}).out);
  EXPECT_TRUE(timed.contains("timings_ms"));
  const auto text = Invoke({"--text", "lattice", "verify", Data("boolean3.json")});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("holds: yes"), std::string::npos);
}

TEST(CliTest, AtomOrderChangesRankLex) {
  const auto j = nlohmann::json::parse(
      Invoke({"--atom-order", "c,b,a", "complex", "shell", "--rank-lex", Data("triangle_boundary.json")}).out);
  EXPECT_EQ(j.at("result").at("order").at(0), "{b,c}");
}

TEST(CliTest, ExportM2) {
  const auto r = Invoke({"export", "--format", "m2", Data("mc_ceiling.json")});
  EXPECT_EQ(r.out, "R = QQ[x_1,x_2]\nI = monomialIdeal(x_1^3, x_1^2*x_2^3)\n");
}

}  // namespace
}  // namespace powerlat
