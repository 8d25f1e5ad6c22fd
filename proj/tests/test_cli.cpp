// Copyright 2026 The Ancilla Authors
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

#include "cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ancilla::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

// Drops the trailing wall-time column.
std::string without_timing(const std::string& line) { return line.substr(0, line.rfind(',')); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ancilla_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(Table1Test, CsvHeaderAndRows) {
  const Outcome o = invoke({"table1", "--n", "2", "--m-min", "2", "--m-max", "3", "--starts", "5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], kTableHeader);
  EXPECT_EQ(ls[1].rfind("2,2,", 0), 0u);
  EXPECT_EQ(ls[2].rfind("2,3,", 0), 0u);
}

TEST(Table1Test, DeterministicForFixedSeed) {
  const std::vector<std::string> args = {"table1", "--n", "2", "--m-min", "3", "--m-max",
                                         "3",      "--starts", "8", "--seed", "42"};
  const auto a = lines(invoke(args).out);
  const auto b = lines(invoke(args).out);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_EQ(without_timing(a[i]), without_timing(b[i]));
}

TEST(Table1Test, SkipHermitianLeavesColumnEmpty) {
  const Outcome o = invoke({"table1", "--n", "2", "--m-min", "2", "--m-max", "2", "--starts", "3",
                            "--skip-hermitian"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(lines(o.out)[1].find(",,3,"), std::string::npos);
}

TEST(Table1Test, JsonMatchesSchema) {
  const Outcome o = invoke({"table1", "--n", "2", "--m-min", "2", "--m-max", "3", "--starts", "3",
                            "--format", "json", "--skip-hermitian"});
  ASSERT_EQ(o.code, kExitOk);
  const json doc = json::parse(o.out);
  std::ifstream schema_file(ANCILLA_SCHEMA_PATH);
  ASSERT_TRUE(schema_file.good());
  const json schema = json::parse(schema_file);
  const json& row_schema = schema["properties"]["rows"]["items"];
  ASSERT_TRUE(doc.contains("rows"));
  ASSERT_EQ(doc["rows"].size(), 2u);
  for (const auto& row : doc["rows"]) {
    for (const auto& key : row_schema["required"]) {
      EXPECT_TRUE(row.contains(key.get<std::string>())) << key;
    }
    EXPECT_EQ(row.size(), row_schema["properties"].size());
    EXPECT_TRUE(row["n"].is_number_integer());
    EXPECT_TRUE(row["value"].is_number());
    EXPECT_TRUE(row["value_hermitian"].is_null());
    EXPECT_TRUE(row["seed"].is_number_integer());
  }
}

TEST(Table1Test, UsageErrors) {
  EXPECT_EQ(invoke({"table1", "--n", "2", "--m-max", "9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table1", "--n", "2", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table1", "--n", "two"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table1", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(DiscriminateTest, PerfectAtFullAncilla) {
  const Outcome o = invoke({"discriminate", "--n", "2", "--k", "2", "--m", "4", "--starts", "20"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0].rfind("n=2 k=2 m=4 lambda=0.75", 0), 0u);
  ASSERT_EQ(ls[1].rfind("success_probability=", 0), 0u);
  EXPECT_NEAR(std::stod(ls[1].substr(20)), 1.0, 1e-4);
  EXPECT_EQ(invoke({"discriminate", "--lambda", "1.5"}).code, kExitUsage);
}

TEST_F(CliFiles, StructureOfExportedState) {
  const std::string file = path("tau.json");
  ASSERT_EQ(invoke({"export", "--family", "max-entangled", "--n", "3", "--out", file}).code, kExitOk);
  const Outcome o = invoke({"structure", "--input", file, "--n", "3", "--m", "3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto ls = lines(o.out);
  EXPECT_EQ(ls[0].rfind("negativity=3.0000", 0), 0u);
  EXPECT_EQ(ls[1], "r=1");
}

TEST_F(CliFiles, StructureReportsNone) {
  std::ofstream(path("mixed.json"))
      << R"({"rows":4,"cols":4,"entries":[[0.25,0],[0,0],[0,0],[0,0],[0,0],[0.25,0],[0,0],[0,0],[0,0],[0,0],[0.25,0],[0,0],[0,0],[0,0],[0,0],[0.25,0]]})";
  const Outcome o = invoke({"structure", "--input", path("mixed.json"), "--n", "2", "--m", "2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(lines(o.out).back(), "none");
}

TEST_F(CliFiles, StructureErrors) {
  std::ofstream(path("bad.json")) << R"({"rows":1,"cols":1,"entries":[["x",0]]})";
  const Outcome bad = invoke({"structure", "--input", path("bad.json"), "--n", "1", "--m", "1"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("entries[0][0]"), std::string::npos);
  EXPECT_EQ(invoke({"structure", "--input", path("missing.json"), "--n", "2", "--m", "2"}).code,
            kExitUsage);
  const std::string file = path("tau.json");
  ASSERT_EQ(invoke({"export", "--family", "max-entangled", "--n", "2", "--out", file}).code, kExitOk);
  EXPECT_EQ(invoke({"structure", "--input", file, "--n", "2", "--m", "3"}).code, kExitUsage);
}

TEST_F(CliFiles, ReversibilityVerdicts) {
  const std::string id = path("id.json");
  ASSERT_EQ(invoke({"export", "--family", "identity", "--n", "2", "--out", id}).code, kExitOk);
  const Outcome yes = invoke({"reversibility", "--choi", id, "--dim-in", "2", "--dim-out", "2"});
  ASSERT_EQ(yes.code, kExitOk) << yes.err;
  EXPECT_NE(yes.out.find("reversible=yes"), std::string::npos);
  EXPECT_NE(yes.out.find("left_inverse=yes"), std::string::npos);

  const std::string wh = path("wh.json");
  ASSERT_EQ(invoke({"export", "--family", "werner-holevo", "--n", "2", "--out", wh}).code, kExitOk);
  const Outcome no = invoke({"reversibility", "--choi", wh, "--dim-in", "2", "--dim-out", "2"});
  ASSERT_EQ(no.code, kExitOk) << no.err;
  EXPECT_NE(no.out.find("reversible=no"), std::string::npos);
  EXPECT_NE(no.out.find("trace_norm_preserving=no"), std::string::npos);

  const std::string t = path("t.json");
  ASSERT_EQ(invoke({"export", "--family", "transpose", "--n", "2", "--out", t}).code, kExitOk);
  const Outcome not_channel = invoke({"reversibility", "--choi", t, "--dim-in", "2", "--dim-out", "2"});
  EXPECT_EQ(not_channel.code, kExitUsage);
  EXPECT_NE(not_channel.err.find("not a channel"), std::string::npos);
}

TEST(ExportTest, StdoutAndUnknownFamily) {
  const Outcome o = invoke({"export", "--family", "identity", "--n", "2"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(json::parse(o.out)["rows"], 4);
  EXPECT_EQ(invoke({"export", "--family", "nope"}).code, kExitUsage);
}

}  // namespace
}  // namespace ancilla::cli
