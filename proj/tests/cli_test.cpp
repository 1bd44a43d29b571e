// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doflab/cli.hpp"

using namespace doflab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "doflab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(CliRegion, TwoUserVerticesContainQ) {
  const auto r = run({"region", "--model", "two-user", "--M", "4", "--N", "3,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n12/5,4/5\n"), std::string::npos);
  EXPECT_NE(r.out.find("d1,d2\n"), std::string::npos);
}

TEST(CliRegion, ThreeUserHasThreeInequalities) {
  const auto r = run({"region", "--model", "three-user", "--M", "2", "--N", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("inequalities (3,"), std::string::npos);
  EXPECT_NE(r.out.find("d1 + d2 + 2 d3 <= 2"), std::string::npos);
}

TEST(CliRegion, SingleUserOuterBound) {
  const auto r = run({"region", "--model", "outer", "--M", "1", "--N", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d1 <= 1"), std::string::npos);
}

TEST(CliRegion, UsageErrors) {
  EXPECT_EQ(run({"region", "--model", "hexagon", "--M", "1", "--N", "1"}).code, 1);
  EXPECT_EQ(run({"region", "--model", "two-user", "--M", "4", "--N", "3,2,1"}).code, 1);
  EXPECT_EQ(run({"region", "--model", "two-user", "--M", "4", "--N", "2,3"}).code, 1);
  EXPECT_EQ(run({"region", "--model", "two-user", "--M", "x", "--N", "3,2"}).code, 1);
  EXPECT_EQ(run({"region", "--M", "4"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"region", "--model", "three-user", "--M", "2", "--N", "1,1,2"}).code, 1);
}

TEST(CliRegion, HelpIsNotAnError) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(CliRegion, JsonFileRoundTrips) {
  const auto path = scratch("region.json");
  const auto r = run({"region", "--model", "two-user", "--M", "5", "--N", "3,2", "--format", "json", "--out",
                      path.string()});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(slurp(path));
  EXPECT_TRUE(regions_equal(region_from_document(doc), two_user_region(5, 3, 2)));
}

TEST(CliRegion, CsvFilesAreByteIdentical) {
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  run({"region", "--model", "outer", "--M", "3", "--N", "2,1,1", "--out", a.string()});
  run({"region", "--model", "outer", "--M", "3", "--N", "2,1,1", "--out", b.string()});
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(scratch("a_halfspaces.csv")), slurp(scratch("b_halfspaces.csv")));
  EXPECT_EQ(slurp(scratch("a_halfspaces.csv")).rfind("d1,d2,d3,bound\n", 0), 0u);
}

TEST(CliRegion, SvgLabelsLinesAndQ) {
  const auto r = run({"region", "--model", "two-user", "--M", "4", "--N", "3,2", "--format", "svg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(">L1<"), std::string::npos);
  EXPECT_NE(r.out.find(">L2<"), std::string::npos);
  EXPECT_NE(r.out.find(">Q (12/5,4/5)<"), std::string::npos);
}

TEST(CliCompare, SaturationAndSumDof) {
  const auto r = run({"compare", "--N", "3,2", "--M", "2,3,4,5,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("region(M=6) = region(M=5)"), std::string::npos);
  EXPECT_EQ(r.out.find("region(M=5) = region(M=4)"), std::string::npos);
  EXPECT_NE(r.out.find("\n4,4,3,16/5\n"), std::string::npos);
}

TEST(CliCompare, SingleM) {
  const auto path = scratch("compare.csv");
  const auto r = run({"compare", "--N", "3,2", "--M", "1", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path), "M,d1,d2\n1,0,0\n1,0,1\n1,1,0\n");
}

TEST(CliSimulate, WorkedExample) {
  const auto r = run({"simulate", "--M", "4", "--N", "3,2", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achieved_dof = 12/5, 4/5; failures 0"), std::string::npos);
}

TEST(CliSimulate, CaseATimeDivision) {
  const auto r = run({"simulate", "--M", "2", "--N", "3,2", "--trials", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("case A: time division"), std::string::npos);
  EXPECT_NE(r.out.find("achieved_dof = 1, 1"), std::string::npos);
}

TEST(CliSimulate, CaseC) {
  const auto r = run({"simulate", "--M", "5", "--N", "3,2", "--trials", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achieved_dof = 45/19, 20/19"), std::string::npos);
}

TEST(CliSimulate, SeedFromEnvironment) {
  ::setenv("DOFLAB_SEED", "42", 1);
  const auto env = run({"simulate", "--M", "4", "--N", "3,2", "--trials", "2"});
  ::setenv("DOFLAB_SEED", "not-a-number", 1);
  const auto bad = run({"simulate", "--M", "4", "--N", "3,2", "--trials", "2"});
  ::unsetenv("DOFLAB_SEED");
  const auto flag = run({"simulate", "--M", "4", "--N", "3,2", "--trials", "2", "--seed", "42"});
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(env.out.find("seed 42"), std::string::npos);
  EXPECT_EQ(bad.code, 1);
}

TEST(CliSimulate, JsonReportAndTranscriptAreDeterministic) {
  const auto a = scratch("sim_a.json"), b = scratch("sim_b.json");
  const auto ta = scratch("tr_a.json"), tb = scratch("tr_b.json");
  run({"simulate", "--M", "4", "--N", "3,2", "--trials", "3", "--seed", "5", "--format", "json", "--out",
       a.string(), "--transcript", ta.string()});
  run({"simulate", "--M", "4", "--N", "3,2", "--trials", "3", "--seed", "5", "--format", "json", "--out",
       b.string(), "--transcript", tb.string()});
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(ta), slurp(tb));
  const auto doc = Json::parse(slurp(a));
  EXPECT_EQ(doc["achieved_dof"], Json::array({"12/5", "4/5"}));
  const auto tr = Json::parse(slurp(ta));
  EXPECT_EQ(tr["decoding"]["users"][0]["recovered_symbols"], 24);
}

TEST(CliSimulate, ThreeUserTarget) {
  const auto r = run({"simulate", "--M", "3", "--N", "2,2,2", "--target", "1/2,1/3,1/4", "--trials", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[two-user-scheme] simulated, verified"), std::string::npos);
  EXPECT_NE(r.out.find("[external-abdoli] not simulated"), std::string::npos);
}

TEST(CliSimulate, ThreeUserTargetOutsideRegion) {
  const auto r = run({"simulate", "--M", "2", "--N", "1,1,1", "--target", "1,1,1", "--trials", "1"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliSimulate, ZeroTrialsIsUsage) { EXPECT_EQ(run({"simulate", "--M", "4", "--N", "3,2", "--trials", "0"}).code, 1); }

TEST(CliSlice, SymmetricCornerInSlice) {
  const auto r = run({"slice", "--M", "2", "--N", "1", "--d3", "1/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P12 = (1/2,1/2)"), std::string::npos);
  EXPECT_NE(r.out.find("L0: d1 + d2 <= 1  (redundant)"), std::string::npos);
}

TEST(CliSlice, BottomIsTwoUserRegion) {
  const auto r = run({"slice", "--M", "2", "--N", "1", "--d3", "0"});
  EXPECT_EQ(r.code, 0);
  const auto pos = r.out.find("d1,d2\n");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_EQ(r.out.substr(pos), points_csv(2, vertex_enumerate(two_user_region(2, 1, 1))));
}

TEST(CliSlice, CaseFourCrossing) {
  const auto r = run({"slice", "--M", "3", "--N", "2", "--d3", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P01 = (1,1/2)"), std::string::npos);
}

TEST(CliSlice, OutOfRange) {
  EXPECT_EQ(run({"slice", "--M", "3", "--N", "2", "--d3", "5"}).code, 1);
  EXPECT_EQ(run({"slice", "--M", "3", "--N", "2", "--d3", "-1/2"}).code, 1);
  EXPECT_EQ(run({"slice", "--M", "1", "--N", "2", "--d3", "0"}).code, 1);
  EXPECT_EQ(run({"slice", "--M", "3", "--N", "2", "--d3", "1/0"}).code, 1);
}

TEST(CliRate, CsvAndSlopes) {
  const auto r = run({"rate", "--M", "2", "--N", "1,1", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("snr_db,rate_user1,rate_user2\n", 0), 0u);
  EXPECT_NE(r.out.find("slope = "), std::string::npos);
  EXPECT_EQ(run({"rate", "--M", "2", "--N", "1,1", "--snr-db", "30,40"}).code, 1);
}
