// Copyright 2026 The qedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qedge/cli.hpp"
#include "qedge/pgm.hpp"
#include "qedge/pipeline.hpp"
#include "qedge/samples.hpp"

namespace {

using namespace qedge;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qedge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    input_ = (dir_ / "sample.pgm").string();
    save_pgm(samples::gray_sample(), input_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::string input_;
};

TEST_F(CliTest, DetectWritesThreeFiles) {
  const auto out = dir_ / "r";
  const auto r = run({"detect", "--variant", "seq50", "--in", input_, "--out-dir", out.string(),
                      "--shots", "50", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(out / "combined.pgm"));
  EXPECT_TRUE(fs::exists(out / "edges.pgm"));
  EXPECT_TRUE(fs::exists(out / "histogram.csv"));
  EXPECT_NE(r.out.find("threshold"), std::string::npos);
  EXPECT_EQ(read(out / "histogram.csv").rfind("bin,count\n", 0), 0u);
}

TEST_F(CliTest, DetectExactMatchesReference) {
  const auto out = dir_ / "exact";
  const auto r = run({"detect", "--variant", "para50", "--in", input_, "--out-dir", out.string(), "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_pgm(out / "combined.pgm"), pipeline::reference_image(samples::gray_sample()));
}

TEST_F(CliTest, DetectIsDeterministic) {
  const auto a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(run({"detect", "--in", input_, "--out-dir", a.string(), "--binary"}).code, 0);
  ASSERT_EQ(run({"detect", "--in", input_, "--out-dir", b.string(), "--binary"}).code, 0);
  EXPECT_EQ(read(a / "combined.pgm"), read(b / "combined.pgm"));
  EXPECT_EQ(read(a / "combined.pgm").substr(0, 2), "P5");
}

TEST_F(CliTest, UnknownVariantFails) {
  const auto r = run({"detect", "--variant", "nope", "--in", input_, "--out-dir", dir_.string()});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("unknown variant"), std::string::npos);
}

TEST_F(CliTest, MissingInputFails) {
  EXPECT_NE(run({"detect", "--in", (dir_ / "missing.pgm").string()}).code, 0);
  EXPECT_NE(run({"detect"}).code, 0);
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"detect", "--in", input_, "--directions", "x"}).code, 0);
}

TEST_F(CliTest, CompareWritesTable) {
  const auto csv = dir_ / "fid.csv";
  const auto r = run({"compare", "--in", input_, "--variant", "all", "--runs", "2", "--exact", "--out",
                      csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(read(csv));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "variant,seed,fidelity");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "1");
  }
  EXPECT_EQ(rows, 12);
}

TEST_F(CliTest, CompareToStdoutIsPureCsv) {
  const auto r = run({"compare", "--in", input_, "--variant", "std50,seqpara50", "--out", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2) << line;
  }
  EXPECT_EQ(lines, 3);
  EXPECT_EQ(r.out, run({"compare", "--in", input_, "--variant", "std50,seqpara50", "--out", "-"}).out);
}

TEST_F(CliTest, GatesReportAndCheck) {
  auto r = run({"gates", "--variant", "std50", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("SX: 2, Rz: 3, depth 6"), std::string::npos) << r.out;
  r = run({"gates", "--variant", "seq50"});
  EXPECT_NE(r.out.find("SX: 6, Rz: 9"), std::string::npos);
  r = run({"gates", "--variant", "seqpara50"});
  EXPECT_NE(r.out.find("SX: 24, Rz: 36"), std::string::npos);
  EXPECT_EQ(run({"gates", "--check"}).code, 0);
}

TEST_F(CliTest, PlanMatchesTable) {
  auto r = run({"plan", "--variant", "std50", "--width", "30", "--height", "30"});
  EXPECT_NE(r.out.find("circuits 2700, measurements 2700, jobs 9"), std::string::npos) << r.out;
  r = run({"plan", "--variant", "para50-3pix", "--in", input_});
  EXPECT_NE(r.out.find("circuits 300, measurements 2700, jobs 1"), std::string::npos) << r.out;
  r = run({"plan", "--variant", "seqpara50", "--width", "64", "--height", "64"});
  EXPECT_NE(r.out.find("measurements 12288"), std::string::npos) << r.out;
  r = run({"plan", "--variant", "seqpara50", "--width", "64", "--height", "64", "--circuits-per-job",
           "5000"});
  EXPECT_NE(r.out.find("jobs 1"), std::string::npos) << r.out;
  r = run({"plan", "--variant", "std50", "--circuits", "601"});
  EXPECT_NE(r.out.find("jobs 3"), std::string::npos) << r.out;
  EXPECT_NE(run({"plan", "--variant", "std50"}).code, 0);
}

TEST_F(CliTest, SampleWritesImage) {
  const auto path = dir_ / "house.pgm";
  ASSERT_EQ(run({"sample", "--name", "house", "--size", "32", "--out", path.string()}).code, 0);
  EXPECT_EQ(load_pgm(path).width(), 32);
  EXPECT_NE(run({"sample", "--name", "cat"}).code, 0);
}

}  // namespace
