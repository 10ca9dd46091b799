#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bergeham/cli/cli.hpp"

namespace fs = std::filesystem;
using namespace bergeham;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bergeham");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("bergeham_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

const char* kComplete5 =
    "5 10\n"
    "0 1 2\n0 1 3\n0 1 4\n0 2 3\n0 2 4\n0 3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

}  // namespace

TEST_F(Cli, CheckSharpSequenceNamesCondition) {
  const auto r = run({"check", "seq:6 6 6 6 6 18 18 18 18", "--theorem", "r-uniform", "--r", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("sequence: 6 6 6 6 6 18 18 18 18"), std::string::npos);
  EXPECT_NE(r.out.find("condition (2) i=4"), std::string::npos);
}

TEST_F(Cli, CheckInputModes) {
  EXPECT_EQ(run({"check", "--seq", "2,2,2", "--theorem", "posa"}).code, 0);
  const auto file = write("d.txt", "# a triangle\n2 2\n2\n");
  EXPECT_EQ(run({"check", "--seq-file", file, "--theorem", "posa"}).code, 0);
  EXPECT_EQ(run({"check", file, "--theorem", "chvatal"}).code, 0);
  const auto g = write("k5.bhg", kComplete5);
  EXPECT_EQ(run({"check", g, "--theorem", "r-uniform", "--r", "3"}).code, 64);  // needs n > 2r
  EXPECT_EQ(run({"check", "--graph", g, "--theorem", "posa"}).code, 0);
}

TEST_F(Cli, CheckUsageErrors) {
  EXPECT_EQ(run({"check", "--seq", "2 2 2", "--seq-file", "x", "--theorem", "posa"}).code, 64);
  EXPECT_EQ(run({"check", "--theorem", "posa"}).code, 64);
  EXPECT_EQ(run({"check", "--seq", "2 2 2", "--theorem", "nonsense"}).code, 64);
  EXPECT_EQ(run({"check", "--seq", "6 6 6 6 6 6 6", "--theorem", "r-uniform"}).code, 64);
  EXPECT_EQ(run({"check", "--seq", "9 9 9 9 9 9 9 9", "--theorem", "non-uniform"}).code, 64);
  EXPECT_EQ(run({"check", "--seq", "9 9 9 9 9 9 9 9", "--theorem", "non-uniform", "--force"}).code, 1);
  EXPECT_EQ(run({"check", "--seq", "10 10 10 10 10 10 10 10", "--theorem", "non-uniform", "--force"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({}).code, 64);
}

TEST_F(Cli, MalformedSequenceReportsPosition) {
  const auto file = write("bad.txt", "3 3 3\n3 x 3\n");
  const auto r = run({"check", "--seq-file", file, "--theorem", "posa"});
  EXPECT_EQ(r.code, 64);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(Cli, MalformedGraphReportsPosition) {
  const auto file = write("bad.bhg", "4 2\n0 1\n0 9\n");
  const auto r = run({"solve", file});
  EXPECT_EQ(r.code, 64);
  EXPECT_NE(r.err.find("bad.bhg"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(Cli, SolveWritesCertificateThatVerifies) {
  const auto g = write("k5.bhg", kComplete5);
  const auto cert = path("k5.cert.json");
  const auto r = run({"solve", g, "--certificate", cert});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: cycle"), std::string::npos);
  const auto v = run({"verify-cert", cert});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid: true\n");
  EXPECT_EQ(run({"verify-cert", cert, "--graph", g}).code, 0);

  // Repeat a vertex in the stored certificate.
  std::ifstream in(cert);
  auto j = nlohmann::json::parse(in);
  j["vertices"][1] = j["vertices"][0];
  std::ofstream(path("bad.cert.json")) << j.dump();
  const auto bad = run({"verify-cert", path("bad.cert.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("valid: false"), std::string::npos);
}

TEST_F(Cli, SolveNegativeAndHeuristic) {
  const auto g = path("h2.bhg");
  ASSERT_EQ(run({"generate", "--family", "h2", "--n", "9", "--r", "3", "--k", "4", "--out", g}).code, 0);
  EXPECT_EQ(run({"solve", g}).code, 1);
  EXPECT_EQ(run({"solve", g, "--heuristic", "--budget-nodes", "5000"}).code, 2);
  // The 2-section screen settles this one without search nodes; H3 needs the search.
  EXPECT_EQ(run({"solve", g, "--budget-nodes", "1"}).code, 1);
  const auto h3 = path("h3.bhg");
  ASSERT_EQ(run({"generate", "--family", "h3", "--n", "12", "--r", "3", "--out", h3}).code, 0);
  EXPECT_EQ(run({"solve", h3, "--budget-nodes", "1"}).code, 2);
}

TEST_F(Cli, GenerateRoundTrip) {
  const auto g = path("h3.bhg");
  const auto r = run({"generate", "--family", "h3", "--n", "10", "--r", "3", "--out", g});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("predicted: 6 6 6 7 7 7 21 21 21 21"), std::string::npos) << r.out;
  std::ifstream in(g);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_bhg(text.str()), example3(10, 3).hypergraph);

  const auto p = run({"generate", "--family", "h2", "--n", "9", "--r", "3", "--k", "4", "--predict"});
  EXPECT_EQ(p.out, "predicted: 6 6 6 6 6 18 18 18 18\n");
  EXPECT_EQ(run({"generate", "--family", "h1", "--n", "9", "--r", "3"}).code, 64);
  EXPECT_EQ(run({"generate", "--family", "h4", "--n", "9", "--r", "3"}).code, 64);
}

TEST_F(Cli, RotateReportsClosure) {
  const auto g = write("p.bhg", "3 2\n0 1\n0 1 2\n");
  const auto r = run({"rotate", g, "--path", "0,0,1,1,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fixed_end: 2"), std::string::npos);
  EXPECT_NE(r.out.find("claim1: holds"), std::string::npos);
  EXPECT_EQ(run({"rotate", g, "--path", "0,1,1,0,2"}).code, 64);
  EXPECT_EQ(run({"rotate", g, "--path", "0,0,1"}).code, 64);
}

TEST_F(Cli, CampaignsAndReports) {
  const auto a = run({"campaign", "verify", "--n", "7", "--r", "3", "--samples", "20", "--seed", "5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run({"campaign", "verify", "--n", "7", "--r", "3", "--samples", "20", "--seed", "5"}).out);
  EXPECT_NE(a.out.find("summary:"), std::string::npos);

  const auto file = path("report.txt");
  const auto b = run({"campaign", "verify", "--n", "7", "--r", "3", "--samples", "20", "--seed", "5", "--threads", "3",
                      "--report", file});
  EXPECT_EQ(b.code, 0);
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), a.out);

  const auto s = run({"campaign", "sharpness", "--n", "9", "--family", "h2"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("h2(n=9,r=3,k=4)"), std::string::npos);
  EXPECT_EQ(run({"campaign", "verify", "--n", "6", "--r", "3"}).code, 64);
  EXPECT_EQ(run({"campaign", "explore", "--n", "7"}).code, 64);
}

TEST_F(Cli, JsonMode) {
  const auto r = run({"--json", "check", "--seq", "6 6 6 6 6 18 18 18 18", "--theorem", "r-uniform", "--r", "3"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["satisfied"], false);
  EXPECT_EQ(j["violations"][0]["index"], 4);

  const auto g = write("k5.bhg", kComplete5);
  const auto s = nlohmann::json::parse(run({"solve", g, "--json"}).out);
  EXPECT_EQ(s["status"], "cycle");
  EXPECT_TRUE(s.contains("certificate"));

  const auto c = nlohmann::json::parse(run({"campaign", "verify", "--n", "7", "--r", "3", "--samples", "5", "--json"}).out);
  EXPECT_EQ(c["trials"].size(), 5u);
}

TEST_F(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("campaign"), std::string::npos);
  EXPECT_EQ(run({"solve", "--help"}).code, 0);
}
