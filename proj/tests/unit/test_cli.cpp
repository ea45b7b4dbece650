#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "orient/error.hpp"
#include "orient_cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("orient_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = orient::cli::run(args, out, err);
    output = out.str().empty() ? json() : json::parse(out.str());
    summary = err.str();
    return status;
  }

  json output;
  std::string summary;
  fs::path dir_;
};

const char* kTriangle = "V 3\nE 0 1\nE 1 2\nE 0 2\n";

TEST_F(Cli, UpperInfeasibleWitness) {
  const auto g = file("g.txt", kTriangle);
  const auto q = file("q.txt", "0 0\n1 0\n2 0\n");
  EXPECT_EQ(run({"check-upper", "--graph", g, "--upper", q}), 1);
  EXPECT_EQ(output["verdict"], "INFEASIBLE");
  EXPECT_EQ(output["witness_set"], json({0, 1, 2}));
}

TEST_F(Cli, OrientThenVerify) {
  const auto g = file("g.txt", kTriangle);
  const auto q = file("q.txt", "0 1\n1 1\n2 1\n");
  ASSERT_EQ(run({"orient", "--graph", g, "--upper", q}), 0);
  EXPECT_EQ(output["verdict"], "FEASIBLE");
  const auto d = file("d.json", output.dump());
  EXPECT_EQ(run({"verify", "--graph", g, "--orientation", d, "--upper", q}), 0);
  EXPECT_EQ(output["verdict"], "VALID");
  const auto zero = file("z.txt", "0 0\n1 1\n2 1\n");
  EXPECT_EQ(run({"verify", "--graph", g, "--orientation", d, "--upper", zero}), 1);
  EXPECT_EQ(output["verdict"], "INVALID");
}

TEST_F(Cli, OracleCount) {
  const auto g = file("g.txt", kTriangle);
  const auto t = file("t.txt", "0 1\n1 1\n2 1\n");
  EXPECT_EQ(run({"oracle-count", "--graph", g, "--target", t}), 0);
  EXPECT_EQ(output["count"], 2);
  EXPECT_EQ(run({"oracle-search", "--graph", g, "--target", file("z.txt", "0 0\n1 0\n2 0\n")}), 1);
  EXPECT_EQ(output["verdict"], "NONE");
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"orient", "--graph", file("bad.txt", "V 2\nE 0 0\n"), "--upper",
                 file("q.txt", "0 1\n1 1\n")}),
            2);
  EXPECT_EQ(output["verdict"], "ERROR");
  EXPECT_EQ(run({"orient-exact", "--graph", file("g.txt", kTriangle), "--target",
                 file("t.txt", "0 1\n1 1\n2 2\n")}),
            2);
  EXPECT_EQ(run({"no-such-command"}), 2);
  EXPECT_EQ(run({"orient"}), 2);
}

TEST_F(Cli, Connectivity) {
  EXPECT_EQ(run({"connectivity", "--graph", file("g.txt", kTriangle)}), 0);
  EXPECT_EQ(output["edge_connectivity"], 2);
  EXPECT_EQ(output["tree_connectivity"], 1);
}

TEST_F(Cli, ExitStatusTable) {
  using orient::ErrorCode;
  using orient::cli::exit_status;
  EXPECT_EQ(exit_status(ErrorCode::kInfeasible), 1);
  EXPECT_EQ(exit_status(ErrorCode::kInvalidInput), 2);
  EXPECT_EQ(exit_status(ErrorCode::kSumMismatch), 2);
  EXPECT_EQ(exit_status(ErrorCode::kPrecondition), 2);
  EXPECT_EQ(exit_status(ErrorCode::kBudgetExceeded), 3);
  EXPECT_EQ(exit_status(ErrorCode::kIndeterminate), 3);
  EXPECT_EQ(exit_status(ErrorCode::kInternal), 3);
}

TEST_F(Cli, ListOrientation) {
  const auto g = file("g.txt", "V 2\nE 0 1\nE 0 1\nE 0 1\nE 0 1\nE 0 1\n");
  const auto lists = file("l.txt", "0 2 3\n1 2 3\n");
  const auto floors = file("f.txt", "0 0 0 0\n1 0 0 0\n");
  EXPECT_EQ(run({"orient-list", "--graph", g, "--lists", lists, "--floors", floors, "--z", "0"}), 0);
  EXPECT_EQ(output["verdict"], "FEASIBLE");
}

}  // namespace
