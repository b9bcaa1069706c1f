#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ssarr/serialize.hpp"

namespace fs = std::filesystem;
using ssarr::Json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(SSARR_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ssarr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  Json report(const std::string& path) {
    const CliRun r = run("analyze " + path + " --json");
    EXPECT_EQ(r.code, 0) << r.out;
    return Json::parse(r.out);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, MakeAndAnalyzeFullMonomial) {
  ASSERT_EQ(run("make full-monomial 2 --out " + file("fm.json")).code, 0);
  const Json j = report(file("fm.json"));
  EXPECT_EQ(j["report"]["d"], 9);
  EXPECT_EQ(j["report"]["census"], Json::parse(R"({"2":6,"3":4,"4":3})"));
}

TEST_F(Cli, MakePencil) {
  const CliRun r = run("make pencil 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["lines"].size(), 4u);
}

TEST_F(Cli, MakeConeWithSeed) {
  ASSERT_EQ(run("make cone --base generic:4 --seed 7 -e 1 --out " + file("c.json")).code, 0);
  const Json j = report(file("c.json"));
  EXPECT_EQ(j["report"]["d"], 11);
  int m = 0;
  for (const auto& p : j["report"]["modular_points"]) m = std::max(m, p["multiplicity"].get<int>());
  EXPECT_EQ(m, 7);
  const CliRun again = run("make cone --base generic:4 --seed 7 -e 1");
  EXPECT_EQ(Json::parse(again.out), Json::parse(run("make cone --base generic:4 --seed 7 -e 1").out));
}

TEST_F(Cli, AnalyzeExamples) {
  ASSERT_EQ(run("make full-monomial 1 --out " + file("a.json")).code, 0);
  const Json a = report(file("a.json"));
  EXPECT_EQ(a["report"]["M"], 4);
  EXPECT_EQ(a["report"]["m_homogeneous"], 3);
  EXPECT_EQ(a["report"]["census"]["2"], 3);
  EXPECT_EQ(a["algebra"]["mdr"]["value"], 2);

  ASSERT_EQ(run("make pencil 7 --out " + file("p.json")).code, 0);
  const Json p = report(file("p.json"));
  EXPECT_EQ(p["report"]["is_pencil"], true);
  for (const auto& c : p["report"]["checks"]) {
    if (c["name"] == "conj1" || c["name"] == "conj2") EXPECT_EQ(c["applicable"], false);
  }

  ASSERT_EQ(run("make aw 4 0,1 --out " + file("w.json")).code, 0);
  const Json w = report(file("w.json"));
  EXPECT_EQ(w["report"]["M"], 2);
  EXPECT_EQ(w["report"]["d"], 13);
  for (const auto& c : w["report"]["checks"]) {
    if (c["name"] == "conj1") EXPECT_EQ(c["pass"], true);
  }
  EXPECT_EQ(run("analyze " + file("w.json")).code, 0);
}

TEST_F(Cli, RecoverAndEnumerate) {
  ASSERT_EQ(run("make aw 4 1,2 --out " + file("w.json")).code, 0);
  const CliRun r = run("recover " + file("w.json") + " --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["exponents"], Json::parse("[0,1]"));
  const CliRun e = run("enumerate-wclasses 6 2 --json");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(Json::parse(e.out).size(), 3u);
}

TEST_F(Cli, AlgebraCommands) {
  ASSERT_EQ(run("make full-monomial 1 --out " + file("a.json")).code, 0);
  EXPECT_EQ(Json::parse(run("algebra mdr " + file("a.json") + " --json").out)["value"], 2);
  EXPECT_EQ(Json::parse(run("algebra ziegler " + file("a.json") + " --line 0 --json").out)["value"], Json::parse("[2,3]"));
  EXPECT_EQ(run("algebra mdr " + file("a.json") + " --bound 5").code, 2);
  ASSERT_EQ(run("make generic 5 --out " + file("g.json")).code, 0);
  EXPECT_EQ(Json::parse(run("algebra nodal-dim " + file("g.json") + " --json").out)["value"], 5);
  EXPECT_EQ(run("algebra nodal-dim " + file("a.json")).code, 2);
}

TEST_F(Cli, VerifyIsByteIdentical) {
  const CliRun a = run("verify thm1-bound --max-n 4 --json");
  const CliRun b = run("verify thm1-bound --max-n 4 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["summary"]["ok"], true);
}

TEST_F(Cli, VerificationFailureExitsOne) {
  // Galois-conjugate classes at n = 5 share a lattice; see README.
  EXPECT_EQ(run("verify thm1b-roundtrip --max-n 5 --transforms 1").code, 1);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify no-such-campaign").code, 2);
  EXPECT_EQ(run("analyze " + file("missing.json")).code, 2);
  EXPECT_EQ(run("make aw 3 0,0").code, 2);
  EXPECT_EQ(run("make frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  {
    std::FILE* f = std::fopen(file("bad.json").c_str(), "w");
    std::fputs("{\"cyclotomic_order\": 1, \"lines\": [[", f);
    std::fclose(f);
  }
  EXPECT_EQ(run("analyze " + file("bad.json")).code, 2);
}

TEST_F(Cli, RoundTripPreservesCoefficients) {
  ASSERT_EQ(run("make aw 5 0,2 --out " + file("w.json")).code, 0);
  const Json before = Json::parse(run("lattice " + file("w.json") + " --json").out);
  const Json arr = Json::parse(std::ifstream(file("w.json")));
  ssarr::save_json(ssarr::to_json(ssarr::arrangement_from_json(arr)), file("w2.json"));
  const Json after = Json::parse(run("lattice " + file("w2.json") + " --json").out);
  EXPECT_EQ(before, after);
}
