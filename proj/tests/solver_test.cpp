#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "lramsey/cnf.hpp"
#include "lramsey/errors.hpp"
#include "lramsey/solver.hpp"
#include "oracles.hpp"

using namespace lramsey;
namespace fs = std::filesystem;

namespace {

bool any_l_free(int n, int k) {
  bool found = false;
  oracle::for_each_coloring(n, k, [&](const oracle::Cells& cells) { found = found || oracle::l_free(n, cells); });
  return found;
}

class StubSolver : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lramsey_stub_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  ExternalSolverConfig stub(const std::string& body) {
    const auto path = dir_ / "stub.sh";
    std::ofstream(path) << "#!/bin/sh\n" << body;
    ExternalSolverConfig cfg;
    cfg.command = "/bin/sh " + path.string();
    cfg.timeout_seconds = 20;
    cfg.workdir = dir_;
    return cfg;
  }

  std::string write_file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

std::string model_lines(const std::vector<int>& model) {
  std::string out = "v";
  for (int lit : model) out += " " + std::to_string(lit);
  return out + " 0\n";
}

GridColoring fixture() { return read_grid_file(std::string(LRAMSEY_DATA_DIR) + "/lfree_20x20.grid"); }

}  // namespace

TEST(SolveInternal, SmallRamseyValues) {
  const auto one = solve_internal(1, 1);
  EXPECT_EQ(one.status, SolveStatus::kSat);
  ASSERT_TRUE(one.witness);
  EXPECT_EQ(one.witness->n(), 1);

  EXPECT_EQ(solve_internal(2, 1).status, SolveStatus::kUnsat);
  EXPECT_FALSE(solve_internal(2, 1).witness);

  const auto four = solve_internal(4, 2);
  EXPECT_EQ(four.status, SolveStatus::kSat);
  ASSERT_TRUE(four.witness);
  EXPECT_TRUE(oracle::l_free(4, {four.witness->cells().begin(), four.witness->cells().end()}));

  EXPECT_EQ(solve_internal(5, 2).status, SolveStatus::kUnsat);
}

TEST(SolveInternal, AgreesWithBruteForce) {
  for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2},
                      std::pair{4, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto out = solve_internal(n, k);
    EXPECT_EQ(out.status == SolveStatus::kSat, any_l_free(n, k)) << n << "," << k;
    if (out.witness) EXPECT_TRUE(is_l_free(*out.witness));
  }
}

TEST(SolveInternal, Deterministic) {
  const auto a = solve_internal(6, 3);
  const auto b = solve_internal(6, 3);
  ASSERT_EQ(a.status, SolveStatus::kSat);
  EXPECT_EQ(*a.witness, *b.witness);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(SolveInternal, HonorsStrategies) {
  const std::vector<SymmetryStrategy> s = {FixFirst{1}, FixRightColumn{0}};
  const auto out = solve_internal(5, 3, s);
  ASSERT_EQ(out.status, SolveStatus::kSat);
  EXPECT_EQ(out.witness->at(1, 1), 1);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(out.witness->at(r, 5), 0);
  const std::vector<FixedCell> clash = {{1, 1, 0}, {2, 1, 0}, {2, 2, 0}};
  EXPECT_EQ(solve_internal_fixed(2, 2, clash).status, SolveStatus::kUnsat);
}

TEST(SolveInternal, NodeLimitGivesUnknown) {
  InternalOptions opts;
  opts.node_limit = 10;
  const auto out = solve_internal(5, 2, {}, opts);
  EXPECT_EQ(out.status, SolveStatus::kUnknown);
  EXPECT_FALSE(out.witness);
  EXPECT_GT(out.stats.nodes, 0);
}

TEST(SolvePartitioned, MatchesUnpartitioned) {
  EngineConfig cfg;
  for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{4, 2}, std::pair{5, 2}, std::pair{3, 3}}) {
    const auto whole = solve_internal(n, k);
    for (int prefix = 0; prefix <= std::min(3, n * n); ++prefix) {
      for (int workers : {1, 3}) {
        const auto part = solve_partitioned(n, k, prefix, workers, cfg);
        EXPECT_EQ(part.status, whole.status) << n << "," << k << " prefix " << prefix;
        if (part.witness) EXPECT_TRUE(is_l_free(*part.witness));
      }
    }
  }
}

TEST(SolvePartitioned, PrefixZeroIsTheSingleSolve) {
  EngineConfig cfg;
  const auto part = solve_partitioned(4, 2, 0, 2, cfg);
  const auto whole = solve_internal(4, 2);
  ASSERT_TRUE(part.witness);
  EXPECT_EQ(*part.witness, *whole.witness);
}

TEST(SolvePartitioned, LowestSatCubeWins) {
  EngineConfig cfg;
  const auto a = solve_partitioned(4, 2, 3, 4, cfg);
  const auto b = solve_partitioned(4, 2, 3, 1, cfg);
  ASSERT_EQ(a.status, SolveStatus::kSat);
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(SolvePartitioned, BadArguments) {
  EngineConfig cfg;
  EXPECT_THROW(solve_partitioned(2, 2, 5, 1, cfg), DomainError);
  EXPECT_THROW(solve_partitioned(2, 2, 1, 0, cfg), DomainError);
}

TEST(ParseSolverOutput, Lines) {
  const auto out = parse_solver_output("c conflicts : 1234\ns SATISFIABLE\nv 1 -2\nv 3 0\n");
  ASSERT_TRUE(out.status);
  EXPECT_EQ(*out.status, SolveStatus::kSat);
  EXPECT_EQ(out.model, (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(out.conflicts, 1234);
  EXPECT_EQ(*parse_solver_output("s UNSATISFIABLE\n").status, SolveStatus::kUnsat);
  EXPECT_FALSE(parse_solver_output("garbage\n").status);
}

TEST_F(StubSolver, TwentyByTwentyModel) {
  const auto g = fixture();
  const auto model = write_file("model.txt", "s SATISFIABLE\n" + model_lines(model_of(g)));
  const auto cfg = stub("cat " + model + "\nexit 10\n");
  const VarMap map(20, 3);
  const auto out = solve_external(cfg, encode(20, 3), map);
  EXPECT_EQ(out.status, SolveStatus::kSat);
  ASSERT_TRUE(out.witness);
  EXPECT_EQ(*out.witness, g);
}

TEST_F(StubSolver, ReceivesTheCnf) {
  const auto cfg = stub("head -n 1 \"$1\" | grep -q '^p cnf 12 19$' || exit 1\necho 's UNSATISFIABLE'\nexit 20\n");
  const auto out = solve_external(cfg, encode(2, 3), VarMap(2, 3));
  EXPECT_EQ(out.status, SolveStatus::kUnsat) << out.diagnostic;
}

TEST_F(StubSolver, Unsatisfiable) {
  const auto cfg = stub("echo 's UNSATISFIABLE'\nexit 20\n");
  const auto out = solve_external(cfg, encode(5, 2), VarMap(5, 2));
  EXPECT_EQ(out.status, SolveStatus::kUnsat);
  EXPECT_FALSE(out.witness);
}

TEST_F(StubSolver, InconsistentModelIsIntegrityError) {
  const auto cfg = stub("echo 's SATISFIABLE'\necho 'v 1 2 -3 0'\nexit 10\n");
  EXPECT_THROW(solve_external(cfg, encode(1, 3), VarMap(1, 3)), IntegrityError);
}

TEST_F(StubSolver, MonochromaticModelIsIntegrityError) {
  const auto cfg = stub("echo 's SATISFIABLE'\necho 'v 1 -2 3 -4 5 -6 7 -8 0'\nexit 10\n");
  EXPECT_THROW(solve_external(cfg, encode(2, 2), VarMap(2, 2)), IntegrityError);
}

TEST_F(StubSolver, ExitCodeWithoutStatusLine) {
  const auto cfg = stub("exit 20\n");
  EXPECT_EQ(solve_external(cfg, encode(5, 2), VarMap(5, 2)).status, SolveStatus::kUnsat);
}

TEST_F(StubSolver, FailuresAreUnknown) {
  const auto crash = stub("echo oops >&2\nexit 1\n");
  const auto out = solve_external(crash, encode(2, 2), VarMap(2, 2));
  EXPECT_EQ(out.status, SolveStatus::kUnknown);
  EXPECT_FALSE(out.diagnostic.empty());

  auto slow = stub("sleep 30\n");
  slow.timeout_seconds = 0.5;
  const auto start = std::chrono::steady_clock::now();
  const auto timed = solve_external(slow, encode(2, 2), VarMap(2, 2));
  EXPECT_EQ(timed.status, SolveStatus::kUnknown);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST_F(StubSolver, ConfigValidation) {
  ExternalSolverConfig cfg;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.command = "true";
  cfg.timeout_seconds = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST_F(StubSolver, PartitionedExternal) {
  EngineConfig cfg;
  cfg.engine = Engine::kExternal;
  cfg.external = stub("echo 's UNSATISFIABLE'\nexit 20\n");
  EXPECT_EQ(solve_partitioned(5, 2, 2, 2, cfg).status, SolveStatus::kUnsat);
}
