// Copyright 2026 The wittext Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "wittext/serialize.hpp"

namespace fs = std::filesystem;
using wittext::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  json j;
};

Result run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + WITTEXT_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.j = json::parse(r.out, nullptr, false);
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wittext_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ModuleWritesFile) {
  Result r = run("module --kind dense --anchor 1/2 --tau 9 --kmin -12 --kmax 12 -o " + path("m.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path("m.json")));
  EXPECT_EQ(r.j["summary"]["kind"], "dense");
  EXPECT_EQ(r.j["summary"]["sl2"], "pass");
  Result stdout_only = run("module --kind counterexample --lambda 1/2 --kmin -12 --kmax 6");
  EXPECT_EQ(stdout_only.code, 0);
  EXPECT_EQ(stdout_only.j["kind"], "counterexample");
  Result irr = run("module --kind dense --tau 2 --anchor 0");
  EXPECT_EQ(irr.code, 0);
}

TEST_F(Cli, ModuleBadInput) {
  EXPECT_EQ(run("module --kind spiral").code, 1);
  EXPECT_EQ(run("module --kind dense --tau x/y").code, 1);
  EXPECT_EQ(run("module --kind dense --bogus 3").code, 1);
  EXPECT_EQ(run("module --kind dense -o /nonexistent/dir/m.json").code, 2);
  EXPECT_EQ(run("").code, 1);
}

TEST_F(Cli, ExtendClosedAndVerify) {
  ASSERT_EQ(run("module --kind dense --anchor 1/2 --tau 9 -o " + path("m.json")).code, 0);
  Result e = run("extend --module " + path("m.json") + " --side gt --branch + -o " + path("gt.json"));
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.j["outcome"]["status"], "Extended");
  EXPECT_EQ(e.j["job"]["depth"], 6);
  Result v = run("verify --action " + path("gt.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.j["report"]["status"], "pass");
  Result lt = run("extend --module " + path("m.json") + " --side lt --branch + -o " + path("lt.json"));
  EXPECT_EQ(lt.code, 0);
  Result g = run("glue --vir --lt " + path("lt.json") + " --gt " + path("gt.json"));
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.j["result"]["ok"], true);
  ASSERT_EQ(run("extend --module " + path("m.json") + " --side gt --branch - -o " + path("gtm.json")).code, 0);
  Result bad = run("glue --vir --lt " + path("lt.json") + " --gt " + path("gtm.json"));
  EXPECT_EQ(bad.code, 3);
}

TEST_F(Cli, ExtendVirReportsZeroCentralOperator) {
  ASSERT_EQ(run("module --kind dense --anchor 1/2 --tau 9 -o " + path("m.json")).code, 0);
  Result e = run("extend --module " + path("m.json") + " --side vir --branch +");
  EXPECT_EQ(e.code, 0);
  ASSERT_TRUE(e.j.contains("central"));
  EXPECT_EQ(e.j["central"][0]["K_zero"], true);
}

TEST_F(Cli, ExtendGenericAndDepthEnv) {
  ASSERT_EQ(run("module --kind dense --anchor 1/2 --tau 9 -o " + path("m.json")).code, 0);
  Result e = run("extend --module " + path("m.json") + " --method generic", "WITTEXT_DEPTH=4");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.j["job"]["depth"], 4);
  EXPECT_EQ(e.j["outcome"]["branches"].size(), 2u);
  EXPECT_EQ(run("extend --module " + path("m.json"), "WITTEXT_DEPTH=zero").code, 1);
}

TEST_F(Cli, ExtendExitCodes) {
  ASSERT_EQ(run("module --kind finite --n 3 -o " + path("v3.json")).code, 0);
  Result inf = run("extend --module " + path("v3.json") + " --method generic --depth 2");
  EXPECT_EQ(inf.code, 3);
  EXPECT_EQ(inf.j["outcome"]["status"], "Infeasible");
  EXPECT_EQ(run("extend --module " + path("missing.json")).code, 2);
  EXPECT_EQ(run("extend --module " + path("v3.json") + " --side up").code, 1);
  std::ofstream(path("junk.json")) << "{\"kind\": 3}";
  EXPECT_EQ(run("extend --module " + path("junk.json")).code, 1);
}

TEST_F(Cli, CounterexampleGenericOutcome) {
  ASSERT_EQ(run("module --kind counterexample --lambda 1/2 --kmin -16 --kmax 6 -o " + path("c.json")).code, 0);
  Result e = run("extend --module " + path("c.json") + " --side gt --method generic");
  EXPECT_EQ(e.j["outcome"]["status"], "Extended");
  EXPECT_EQ(e.code, 0);
}

TEST_F(Cli, FreeLie) {
  Result d = run("freelie dims --max 13");
  EXPECT_EQ(d.code, 0);
  ASSERT_EQ(d.j["table"].size(), 9u);
  for (const auto& row : d.j["table"]) EXPECT_EQ(row["dim"], row["formula"]);
  Result m = run("freelie member --target r2 --gens r1 --max 11");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.j["verdict"]["member"], false);
  EXPECT_EQ(m.j["verdict"]["stable"], true);
  Result maps = run("freelie maps --max 9");
  EXPECT_EQ(maps.code, 0);
  EXPECT_EQ(run("freelie member --target q7 --gens r1").code, 1);
}

TEST_F(Cli, ReproduceIsDeterministicWithoutTiming) {
  Result a = run("reproduce --suite dense --no-timing");
  Result b = run("reproduce --suite dense --no-timing");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.j["criteria"].size(), 4u);
  EXPECT_EQ(a.j["failed"], 0);
}
