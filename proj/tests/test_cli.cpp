// Copyright 2026 The qaffine Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Runs the built qaffine binary end to end.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "qaffine/io.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace qaffine {
namespace {

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qaffine_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string &name, const std::string &text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  std::string read(const std::string &name) {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + " " QAFFINE_CLI_PATH " " + args + " --out-dir " +
                            dir_.string() + " > " + (dir_ / "stdout.txt").string() +
                            " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

constexpr const char *kIdentitySpec = R"({"version": 1, "n": 1, "psi": [[1, 0], [0, 0]],
  "steps": [{"A": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "B": "zero"}]})";
constexpr const char *kTranslateSpec = R"({"version": 1, "n": 1, "psi": [[1, 0], [0, 0]],
  "steps": [{"A": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "B": [[1, 0], [0, 0]]}]})";

TEST_F(Cli, IdentitySpec) {
  ASSERT_EQ(run("run " + write("spec.json", kIdentitySpec).string()), 0);
  EXPECT_EQ(read("extracted.csv"), "index,re,im\n0,1,0\n1,0,0\n");
  EXPECT_NE(read("result.json").find("\"scale\": 2"), std::string::npos);
}

TEST_F(Cli, TranslationSpec) {
  ASSERT_EQ(run("affine-run " + write("spec.json", kTranslateSpec).string()), 0);
  EXPECT_EQ(read("extracted.csv"), "index,re,im\n0,2,0\n1,0,0\n");
}

TEST_F(Cli, RandomSpecVerifies) {
  testing::Random rng(191);
  ProblemSpec spec;
  spec.sequence = AffineSequence{3, rng.unit_vector(8), {}};
  for (int j = 0; j < 3; ++j) {
    spec.sequence.steps.push_back(AffineStep::translate(rng.contraction(8), rng.unit_vector(8)));
  }
  const fs::path p = write("spec.json", serialize_problem_spec(spec));
  ASSERT_EQ(run("run " + p.string() + " --verify --raw-amplitudes"), 0);
  const std::string out = read("stdout.txt");
  const auto pos = out.find(": ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stod(out.substr(pos + 2)), 1e-9);
  const ComplexVector got = vector_from_csv(read("extracted.csv"));
  EXPECT_LE(max_abs_diff(got, classical_affine_compose(spec.sequence)), 1e-9);
  EXPECT_NE(read("result.json").find("raw_amplitudes"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("run " + write("bad.json", R"({"version": 1})").string()), 2);
  EXPECT_NE(read("stderr.txt").find("problem_schema"), std::string::npos);

  const std::string expansive = R"({"version": 1, "n": 1, "psi": [[1, 0], [0, 0]],
    "steps": [{"A": [[[2, 0], [0, 0]], [[0, 0], [2, 0]]], "B": "zero"}]})";
  EXPECT_EQ(run("run " + write("wide.json", expansive).string()), 3);
  EXPECT_NE(read("stderr.txt").find("contraction"), std::string::npos);

  std::string many = R"({"version": 1, "n": 1, "psi": [[1, 0], [0, 0]], "steps": [)";
  for (int j = 0; j < 12; ++j) {
    many += std::string(j ? "," : "") + R"({"A": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "B": "zero"})";
  }
  many += "]}";
  EXPECT_EQ(run("run " + write("many.json", many).string()), 4);
  EXPECT_EQ(run("no-such-command"), 2);
}

TEST_F(Cli, ShippedExamplesVerify) {
  for (const auto &entry : fs::directory_iterator(QAFFINE_EXAMPLES_DIR)) {
    EXPECT_EQ(run("run " + entry.path().string() + " --verify"), 0) << entry.path();
  }
}

TEST_F(Cli, Baseline) {
  ASSERT_EQ(run("baseline " + write("spec.json", kTranslateSpec).string() + " --verify"), 0);
  const ComplexVector got = vector_from_csv(read("extracted.csv"));
  EXPECT_NEAR(got(0).real(), 2.0, 1e-12);
}

TEST_F(Cli, GatesCompareIsDeterministic) {
  ASSERT_EQ(run("gates compare --seed 3"), 0);
  const std::string first = read("gatecounts.json");
  ASSERT_EQ(run("gates compare", "QAFFINE_SEED=3"), 0);
  EXPECT_EQ(read("gatecounts.json"), first);
  EXPECT_NE(first.find("\"sequential\""), std::string::npos);
  EXPECT_NE(first.find("\"augmented\""), std::string::npos);
}

TEST_F(Cli, PortfolioDemo) {
  ASSERT_EQ(run("demo portfolio --shots 20000 --seed 5"), 0);
  const std::string csv = read("portfolio.csv");
  EXPECT_EQ(csv.rfind("bits,amplitude,probability,empirical_frequency\n", 0), 0U);
  EXPECT_NE(csv.find("\n00,0.69999999999999996,"), std::string::npos);
  ASSERT_EQ(run("demo portfolio --shots 20000 --seed 5"), 0);
  EXPECT_EQ(read("portfolio.csv"), csv);
}

TEST_F(Cli, SignalDemo) {
  ASSERT_EQ(run("demo signal --length 16 --scale-a 1 --bias-b 0"), 0);
  std::istringstream in(read("signal.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,input,quantum_out,classical_out");
  int rows = 0;
  while (std::getline(in, line)) {
    double t, x, q, c;
    char comma;
    std::istringstream row(line);
    row >> t >> comma >> x >> comma >> q >> comma >> c;
    EXPECT_NEAR(q, x, 1e-10);
    EXPECT_NEAR(c, x, 1e-10);
    ++rows;
  }
  EXPECT_EQ(rows, 16);
}

} // namespace
} // namespace qaffine
