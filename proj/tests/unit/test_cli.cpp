#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "netgalois/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kData = NETGALOIS_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "netgalois");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = netgalois::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("netgalois-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildWritesReportAndLattice) {
  const auto r = run({"build", "--instance", kData + "/f7n2.json", "--out", path("b.json"), "--lattice",
                      path("l.json"), "--dot", path("l.dot")});
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = netgalois::read_json_file(path("b.json"));
  EXPECT_EQ(doc.at("version"), 1);
  EXPECT_EQ(doc.at("counts").at("lattice_elements"), 10);
  EXPECT_EQ(doc.at("counts").at("G"), 2016);
  EXPECT_TRUE(fs::exists(path("l.json")));
  EXPECT_TRUE(fs::exists(path("l.dot")));
}

TEST_F(Cli, SweepF7AllPass) {
  const auto r = run({"sweep", "--instance", kData + "/f7n2.json", "--family", "cyclic-over-D", "--out", path("s.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = netgalois::read_json_file(path("s.json"));
  EXPECT_EQ(doc.at("verdicts").size(), 2016u);
  EXPECT_EQ(doc.at("failed"), 0);
}

TEST_F(Cli, SandwichBorel) {
  const auto r = run({"sandwich", "--instance", kData + "/f7n2.json", "--subgroup", kData + "/borel.json", "--out",
                      path("w.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const json res = netgalois::read_json_file(path("w.json")).at("result");
  EXPECT_EQ(res.at("net_subgroup_order"), 252);
  EXPECT_EQ(res.at("F_order"), 252);
  EXPECT_EQ(res.at("normalizer_order"), 252);
}

TEST_F(Cli, ReportOnlyOnF2) {
  const auto r = run({"check-axioms", "--instance", kData + "/f2n2.json", "--report-only", "--out", path("a.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = netgalois::read_json_file(path("a.json"));
  for (const auto& c : doc.at("checks")) EXPECT_FALSE(c.at("asserted").get<bool>());
}

TEST_F(Cli, OtherCommandsSucceedOnF7) {
  for (const char* cmd : {"nets", "classes", "support"})
    EXPECT_EQ(run({cmd, "--instance", "F7:2", "--out", path(std::string(cmd) + ".json")}).code, 0) << cmd;
  EXPECT_EQ(run({"sigma", "--instance", "F7:2", "--subgroup", kData + "/borel.json", "--out", path("g.json")}).code, 0);
  EXPECT_EQ(run({"support", "--instance", "F7:2", "--element", "[1,1]", "--out", path("e.json")}).code, 0);
}

TEST_F(Cli, ReplayReproducesFailures) {
  ASSERT_EQ(run({"check-axioms", "--instance", kData + "/z4n2.json", "--out", path("z.json")}).code, 0);
  const auto r = run({"replay", "--instance", kData + "/z4n2.json", "--report", path("z.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("reproduced c12"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("STALE"), std::string::npos) << r.out;
}

TEST_F(Cli, JobsDoNotChangeBytes) {
  ASSERT_EQ(run({"sweep", "--instance", "F7:2", "--jobs", "1", "--out", path("1.json")}).code, 0);
  ASSERT_EQ(run({"sweep", "--instance", "F7:2", "--jobs", "3", "--out", path("3.json")}).code, 0);
  EXPECT_EQ(netgalois::dump(netgalois::read_json_file(path("1.json"))),
            netgalois::dump(netgalois::read_json_file(path("3.json"))));
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"build"}).code, 2);
  EXPECT_EQ(run({"build", "--instance", "F6:2", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"build", "--instance", "F7:2", "--jobs", "none", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"check-axioms", "--instance", "F7:2", "--conditions", "0-3", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"sweep", "--instance", "F7:2", "--family", "other", "--out", path("x.json")}).code, 2);
}

TEST_F(Cli, CapExitsThree) {
  ::setenv("NETGALOIS_CAP", "1000", 1);
  const auto r = run({"build", "--instance", "F7:2", "--out", path("x.json")});
  ::unsetenv("NETGALOIS_CAP");
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}
