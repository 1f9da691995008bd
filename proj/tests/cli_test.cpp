#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dsssp/random_graph.hpp"
#include "fixture_cases.hpp"
#include "gtest/gtest.h"

namespace dsssp {
namespace {

using testing::fixture;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dsssp");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Random weighted edge list written to a temporary file.
std::string write_random_graph(std::uint64_t seed) {
  SparseMatrix a = random_graph(
      {.vertices = 300, .edges = 3000, .weights = WeightKind::kReal, .connected = true}, seed);
  std::string path = ::testing::TempDir() + "cli_random_" + std::to_string(seed) + ".edges";
  std::ofstream f(path);
  f.precision(17);
  for (const Triple& t : a.triples()) f << t.row << ' ' << t.col << ' ' << t.weight << '\n';
  return path;
}

TEST(CliRunTest, UnitPathWithVerify) {
  Outcome r = invoke({"run", "--graph", fixture("path.edges"), "--source", "0", "--delta", "1",
                      "--verify"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "0\t0\n1\t1\n2\t2\n3\t3\n4\t4\n");
  EXPECT_NE(r.err.find("verify: ok"), std::string::npos);
  EXPECT_NE(r.err.find("outer_iterations: 5"), std::string::npos);
  EXPECT_NE(r.err.find("median_ms:"), std::string::npos);
}

TEST(CliRunTest, MatrixMarketUsesFileLabels) {
  Outcome r = invoke({"run", "--graph", fixture("weighted.mtx"), "--source", "1", "--verify"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  // 1->2 0.5, 2->3 1.25, 3->4 2.0, 4->5 0.75.
  EXPECT_EQ(r.out, "1\t0\n2\t0.5\n3\t1.75\n4\t3.75\n5\t4.5\n");
}

TEST(CliRunTest, DirectedEdgeListOmitsUnreachable) {
  Outcome r = invoke({"run", "--graph", fixture("commented.edges"), "--directed", "--source",
                      "9", "--verify"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "5\t2\n9\t0\n12\t1\n");
}

TEST(CliRunTest, MissingSourceIsBadFlags) {
  Outcome r = invoke({"run", "--graph", fixture("path.edges"), "--source", "99"});
  EXPECT_EQ(r.code, cli::kBadFlags);
  EXPECT_NE(r.err.find("99"), std::string::npos);
}

TEST(CliRunTest, BadFlags) {
  const std::string g = fixture("path.edges");
  for (std::vector<std::string> args : {
           std::vector<std::string>{"run", "--graph", g, "--source", "0", "--delta", "0"},
           {"run", "--graph", g, "--source", "0", "--delta", "-1"},
           {"run", "--graph", g, "--source", "0", "--workers", "0"},
           {"run", "--graph", g, "--source", "0", "--repeat", "0"},
           {"run", "--graph", g, "--source", "0", "--backend", "gpu"},
           {"run", "--graph", g, "--source", "0", "--format", "csv"},
           {"run", "--graph", g},
           {"run", "--graph", g, "--source", "0", "--bogus"},
           {},
       }) {
    EXPECT_EQ(invoke(args).code, cli::kBadFlags);
  }
}

TEST(CliRunTest, LoadErrors) {
  Outcome missing = invoke({"run", "--graph", fixture("absent.edges"), "--source", "0"});
  EXPECT_EQ(missing.code, cli::kLoadError);
  Outcome malformed = invoke({"run", "--graph", fixture("bad_entry.mtx"), "--source", "1"});
  EXPECT_EQ(malformed.code, cli::kLoadError);
  EXPECT_NE(malformed.err.find("line 5"), std::string::npos);
  Outcome wrong_format =
      invoke({"run", "--graph", fixture("path.edges"), "--format", "mtx", "--source", "0"});
  EXPECT_EQ(wrong_format.code, cli::kLoadError);
}

TEST(CliRunTest, SelfLoopWarning) {
  Outcome r = invoke({"run", "--graph", fixture("selfloop_dup.edges"), "--source", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("warning: dropped 1 self-loop"), std::string::npos);
}

TEST(CliRunTest, InjectedFaultFailsVerification) {
  Outcome r = invoke({"run", "--graph", fixture("path.edges"), "--source", "0", "--verify",
                      "--inject-fault"});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_NE(r.err.find("MISMATCH"), std::string::npos);
  // Without --verify the fault goes unnoticed.
  Outcome quiet =
      invoke({"run", "--graph", fixture("path.edges"), "--source", "0", "--inject-fault"});
  EXPECT_EQ(quiet.code, cli::kOk);
}

TEST(CliRunTest, FusedParallelOutputEqualsUnfused) {
  const std::string g = write_random_graph(5);
  Outcome base = invoke({"run", "--graph", g, "--directed", "--source", "0", "--delta", "3",
                         "--verify"});
  ASSERT_EQ(base.code, cli::kOk) << base.err;
  Outcome fused = invoke({"run", "--graph", g, "--directed", "--source", "0", "--delta", "3",
                          "--backend", "fused", "--workers", "4", "--chunks-per-worker", "3",
                          "--verify"});
  EXPECT_EQ(fused.code, cli::kOk) << fused.err;
  EXPECT_EQ(fused.out, base.out);
  EXPECT_NE(fused.err.find("backend: fused"), std::string::npos);
  Outcome skip = invoke({"run", "--graph", g, "--directed", "--source", "0", "--delta", "3",
                         "--skip-empty-buckets", "--repeat", "3"});
  EXPECT_EQ(skip.out, base.out);
}

TEST(CliRunTest, OutputIsDeterministic) {
  const std::string g = write_random_graph(6);
  std::vector<std::string> args = {"run", "--graph", g, "--source", "7", "--backend", "fused",
                                   "--workers", "8"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliRunTest, WritesOutputFile) {
  const std::string path = ::testing::TempDir() + "cli_distances.tsv";
  Outcome r = invoke({"run", "--graph", fixture("path.edges"), "--source", "2", "--output", path});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(content.str(), "0\t2\n1\t1\n2\t0\n3\t1\n4\t2\n");
}

TEST(CliSelftestTest, DefaultSeedPasses) {
  Outcome r = invoke({"selftest"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("100 cases passed"), std::string::npos);
}

TEST(CliSelftestTest, ZeroCasesIsVacuousPassWithWarning) {
  Outcome r = invoke({"selftest", "--cases", "0"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliSelftestTest, InjectedFaultReportsSeed) {
  Outcome r = invoke({"selftest", "--seed", "40", "--cases", "2", "--inject-fault"});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_NE(r.err.find("seed=40"), std::string::npos);
}

}  // namespace
}  // namespace dsssp
