#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace airtime::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("airtime_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Cli, AllocateTableOneRows) {
  const Result gsa = invoke({"allocate", "--preset", "table1", "--policy", "gsa"});
  ASSERT_EQ(gsa.code, 0) << gsa.err;
  EXPECT_NE(gsa.out.find("     4      go     0.000        2.857"), std::string::npos) << gsa.out;
  EXPECT_NE(gsa.out.find("     1  client     0.714        0.714"), std::string::npos);
  const Result eql = invoke({"allocate", "--preset", "table1", "--policy", "eql"});
  EXPECT_NE(eql.out.find("     6  client     0.909        0.909"), std::string::npos);
}

TEST(Cli, AllocateCsv) {
  const Result r = invoke({"allocate", "--preset", "table1", "--policy", "wtd", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "node_id,role,upload_s,broadcast_s,rate_mbps,utility");
  EXPECT_NE(r.out.find("\n4,go,0.000000,0.869565,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("# nash_product,"), std::string::npos);
}

TEST(Cli, EmptyScenarioIsASchemaError) {
  const auto dir = scratch("empty");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "empty.json") << "{}";
  const Result r = invoke({"allocate", (dir / "empty.json").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("nodes"), std::string::npos);
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"allocate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"allocate", "--preset", "table1", "--policy", "best"}).code, kExitUsage);
  EXPECT_EQ(invoke({"allocate", "--preset", "table1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, NothingToShareIsInfeasible) {
  const auto dir = scratch("infeasible");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "s.json") << R"({"nodes": [
      {"id": 1, "join_s": 0, "leave_s": 5, "data_mb": 0},
      {"id": 2, "join_s": 0, "leave_s": 5, "data_mb": 0}]})";
  EXPECT_EQ(invoke({"allocate", (dir / "s.json").string()}).code, kExitInfeasible);
}

TEST(Cli, GroupWithoutGoCandidateIsAnInputError) {
  const auto dir = scratch("nogo");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "s.json") << R"({"nodes": [
      {"id": 1, "join_s": 0, "leave_s": 5, "data_mb": 10},
      {"id": 2, "join_s": 0, "leave_s": 5, "data_mb": 10},
      {"id": 3, "join_s": 0, "leave_s": 5, "data_mb": 10}],
    "links": [[1, 2]]})";
  EXPECT_EQ(invoke({"allocate", (dir / "s.json").string()}).code, kExitUsage);
}

TEST(Cli, ScheduleTableOneRoundZero) {
  const Result r = invoke({"schedule", "--preset", "table1", "--round", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("node_id,kind,start_s,duration_s\n"
                       "1,upload,0.000000,0.010000\n"
                       "1,broadcast,0.010000,0.010000\n",
                       0),
            0u);
  EXPECT_NE(r.out.find("\n4,broadcast,0.100000,0.040000\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n1,upload,0.140000,0.010000\n"), std::string::npos);
  EXPECT_EQ(invoke({"schedule", "--preset", "table1", "--round", "3"}).code, kExitUsage);
}

TEST(Cli, ScheduleTwoNodeRoundHasNoUploads) {
  const Result r = invoke({"schedule", "--preset", "dynamic4", "--round", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("upload"), std::string::npos);
}

TEST(Cli, SimulateCreatesTheDirectoryAndFiles) {
  const auto dir = scratch("simulate") / "nested";
  const Result r = invoke({"simulate", "--preset", "dynamic4", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rounds 5"), std::string::npos);
  for (const char* f : {"rounds.csv", "delivery.csv", "metrics.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_EQ(invoke({"simulate", "--preset", "dynamic4"}).code, kExitUsage);
}

TEST(Cli, CompareAndSweepAreReproducible) {
  const std::vector<std::string> compare = {"compare", "--preset", "table1", "--durations",
                                            "5,10", "--reps", "2", "--seed", "3"};
  const Result a = invoke(compare);
  const Result b = invoke(compare);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 3);
  const std::vector<std::string> sweep = {"sweep", "--preset", "table1", "--slot-sizes", "20",
                                          "--reps", "2"};
  const Result c = invoke(sweep);
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "t_slot_ms,mean_wpf,stddev");
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 2);
  EXPECT_EQ(c.out, invoke(sweep).out);
}

TEST(Cli, OutFlagWritesAFile) {
  const auto dir = scratch("outfile");
  std::filesystem::create_directories(dir);
  const Result r = invoke({"allocate", "--preset", "table1", "--format", "csv", "--out",
                           (dir / "a.csv").string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(dir / "a.csv").substr(0, 7), "node_id");
}

}  // namespace
}  // namespace airtime::cli
