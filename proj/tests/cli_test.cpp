// Copyright 2026 The OAX Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI from a scratch directory so no oax.toml is picked up.
Run oax(const std::string& args) {
  static const fs::path scratch = [] {
    auto d = fs::temp_directory_path() / ("oax-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  std::string cmd = "cd '" + scratch.string() + "' && '" + std::string(OAX_BIN) + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const char* name) { return "'" + std::string(OAX_SAMPLES_DIR) + "/" + name + "'"; }

TEST(CliTest, Validate) {
  EXPECT_EQ(oax("validate " + sample("bsb-policy.json")).code, 0);
  auto amb = oax("validate " + sample("ambiguous-size.json"));
  EXPECT_EQ(amb.code, 1);
  EXPECT_NE(amb.out.find("5 interpretations"), std::string::npos);
}

TEST(CliTest, ConflictExitCodes) {
  auto r = oax("conflict " + sample("bsb-policy.json") + " " + sample("museum-request.json") + " --verdicts " +
               sample("bsb-verdicts.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("width is the sole conflicting axis"), std::string::npos);
  EXPECT_EQ(oax("conflict " + sample("supply-chain-upstream.json") + " " + sample("supply-chain-upstream.json")).code, 0);
  // No shared action.
  EXPECT_EQ(oax("conflict " + sample("map-tiles.json") + " " + sample("bsb-policy.json")).code, 2);
}

TEST(CliTest, ConflictJson) {
  auto r = oax("conflict " + sample("bsb-policy.json") + " " + sample("museum-request.json") + " --format json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Conflict");
}

TEST(CliTest, UnknownIsExitThree) {
  // Both leave the purpose operand to an outside verdict and agree on size.
  auto r = oax("conflict " + sample("bsb-policy.json") + " " + sample("bsb-policy.json") + " --verdicts " +
               sample("bsb-verdicts.json"));
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST(CliTest, Request) {
  EXPECT_EQ(oax("request " + sample("bsb-policy.json") + " width=1200,height=400").code, 1);
  EXPECT_EQ(oax("request " + sample("bsb-policy.json") + " width=400,height=400").code, 0);
  EXPECT_EQ(oax("request " + sample("bsb-policy.json") + " colour=3").code, 2);
  EXPECT_EQ(oax("request " + sample("map-tiles.json") + " lat=50,lon=8").code, 0);
}

TEST(CliTest, SubsumeAndRefine) {
  EXPECT_EQ(oax("subsume " + sample("supply-chain-downstream.json") + " " + sample("supply-chain-upstream.json")).code, 0);
  EXPECT_EQ(oax("subsume " + sample("supply-chain-upstream.json") + " " + sample("supply-chain-downstream.json")).code, 1);
  EXPECT_EQ(oax("refine " + sample("supply-chain-upstream.json") + " " + sample("supply-chain-downstream.json")).code, 0);
  EXPECT_EQ(oax("refine " + sample("supply-chain-downstream.json") + " " + sample("supply-chain-upstream.json")).code, 1);
}

TEST(CliTest, Lint) {
  auto r = oax("lint " + sample("lint-fixture.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("SelfContradiction"), std::string::npos);
  EXPECT_NE(r.out.find("permission[1].constraint[1]"), std::string::npos);
  auto j = nlohmann::json::parse(oax("lint " + sample("lint-fixture.json") + " --format json").out);
  EXPECT_TRUE(j.is_array() || j.is_object());
}

TEST(CliTest, BadInputIsExitTwo) {
  EXPECT_EQ(oax("validate /nonexistent/policy.json").code, 2);
  EXPECT_NE(oax("conflict").code, 0);
}

TEST(CliTest, EmitSmt) {
  auto r = oax("emit " + sample("supply-chain-downstream.json") + " " + sample("supply-chain-upstream.json") +
               " --format smt --relation subsume");
  EXPECT_EQ(r.code, 0) << r.out;
  ASSERT_GE(r.out.size(), 12u);
  EXPECT_EQ(r.out.substr(r.out.size() - 12), "(check-sat)\n");
  auto t = oax("emit " + sample("supply-chain-downstream.json") + " " + sample("supply-chain-upstream.json") +
               " --format tptp --relation subsume");
  EXPECT_NE(t.out.find(",conjecture,"), std::string::npos);
  EXPECT_EQ(oax("emit " + sample("bsb-policy.json") + " " + sample("museum-request.json") + " --format smt").code, 2);
}

TEST(CliTest, BenchGenerate) {
  auto dir = fs::temp_directory_path() / ("oax-cli-bench-" + std::to_string(::getpid()));
  auto r = oax("bench generate --out '" + dir.string() + "'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "A" / "A01.p"));
  // An explicitly requested prover that cannot be found is an environment error.
  EXPECT_EQ(oax("bench run --dir '" + dir.string() + "' --provers vampire --vampire /nonexistent/vampire").code, 2);
  fs::remove_all(dir);
}

TEST(CliTest, ProfileDump) {
  auto r = oax("profile --dump --format json");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NE(r.out.find("oax:spatialCoordinatesLatitude"), std::string::npos);
}

}  // namespace
