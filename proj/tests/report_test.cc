// Copyright 2026 The CSM Authors.
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

#include "csm/report.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csm/config.h"
#include "csm/experiment.h"
#include "gtest/gtest.h"

namespace csm {
namespace {

ResultRow Row(int round, int epoch, const char* algo, int observed) {
  return {round, epoch, algo, "weight2", observed, 1.5 * observed, true, 0.25, 0.0};
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string CsvOf(const ScenarioConfig& c) {
  std::ostringstream out;
  WriteResultsCsv(out, RunExperiment(c).rows);
  return out.str();
}

ScenarioConfig Tiny() {
  ScenarioConfig c = PresetConfig("small");
  c.rounds = 3;
  c.epochs = 2;
  return c;
}

TEST(SummarizeTest, SingleRowHasZeroSpread) {
  const std::vector<ResultRow> rows = {Row(0, 0, "greedy", 4)};
  const Summary s = Summarize(rows);
  ASSERT_EQ(s.per_epoch.size(), 1u);
  EXPECT_DOUBLE_EQ(s.per_epoch[0].mean, 4.0);
  EXPECT_DOUBLE_EQ(s.per_epoch[0].stddev, 0.0);
  EXPECT_EQ(s.per_epoch[0].count, 1);
}

TEST(SummarizeTest, EqualRowsHaveZeroSpread) {
  const std::vector<ResultRow> rows = {Row(0, 0, "sgg", 6), Row(1, 0, "sgg", 6)};
  EXPECT_DOUBLE_EQ(Summarize(rows).per_epoch[0].stddev, 0.0);
}

TEST(SummarizeTest, SampleStandardDeviation) {
  const std::vector<ResultRow> rows = {Row(0, 2, "proposed", 3), Row(1, 2, "proposed", 5),
                                       Row(2, 2, "proposed", 10)};
  const Summary s = Summarize(rows);
  EXPECT_DOUBLE_EQ(s.per_epoch[0].mean, 6.0);
  // Deviations -3, -1, 4: (9 + 1 + 16) / 2 = 13.
  EXPECT_NEAR(s.per_epoch[0].stddev, std::sqrt(13.0), 1e-12);
  ASSERT_EQ(s.per_algorithm.size(), 1u);
  EXPECT_DOUBLE_EQ(s.per_algorithm[0].connectivity_rate, 1.0);
  EXPECT_DOUBLE_EQ(s.per_algorithm[0].mean_objective, 9.0);
}

TEST(SummarizeTest, GroupsByAlgorithmInFirstAppearanceOrder) {
  std::vector<ResultRow> rows = {Row(0, 0, "sgg", 1), Row(0, 0, "greedy", 2),
                                 Row(0, 1, "sgg", 3), Row(0, 1, "proposed", 4)};
  rows[3].connected = false;
  const Summary s = Summarize(rows);
  ASSERT_EQ(s.per_algorithm.size(), 3u);
  EXPECT_EQ(s.per_algorithm[0].algorithm, "sgg");
  EXPECT_EQ(s.per_algorithm[1].algorithm, "greedy");
  EXPECT_EQ(s.per_algorithm[2].algorithm, "proposed");
  EXPECT_DOUBLE_EQ(s.per_algorithm[2].connectivity_rate, 0.0);
  EXPECT_EQ(s.per_epoch.size(), 4u);
}

TEST(SummarizeTest, EmptyInputIsRejected) {
  EXPECT_THROW(Summarize({}), std::invalid_argument);
}

class PlotDataTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("csm_plot_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(PlotDataTest, EmptySummaryWritesHeadersOnly) {
  const PlotFiles files = EmitPlotData(Summary{}, {}, dir_);
  EXPECT_EQ(Slurp(files.bars), std::string(kBarsHeader) + "\n");
  EXPECT_TRUE(std::filesystem::exists(files.network));
}

TEST_F(PlotDataTest, OneLinePerSeriesAndEpoch) {
  const std::vector<ResultRow> rows = {Row(0, 0, "proposed", 1), Row(0, 0, "greedy", 2),
                                       Row(0, 0, "sgg", 3), Row(0, 1, "proposed", 4),
                                       Row(0, 1, "greedy", 5), Row(0, 1, "sgg", 6)};
  const PlotFiles files = EmitPlotData(Summarize(rows), {}, dir_);
  std::istringstream lines(Slurp(files.bars));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kBarsHeader);
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 6);
}

TEST(SnapshotTest, RoundTrip) {
  NetworkSnapshot a{1, 2, "proposed", {Point(0.1, 1.0 / 3.0), Point(5, 6)}, {{0, 1}}};
  NetworkSnapshot b{1, 2, "greedy", {Point(7, 8)}, {}};
  std::stringstream buf;
  WriteSnapshots(buf, std::vector{a, b});
  const auto back = ReadSnapshots(buf);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].positions, a.positions);
  EXPECT_EQ(back[0].edges, a.edges);
  EXPECT_EQ(back[1].algorithm, "greedy");
  std::istringstream bad("snapshot 0 0 proposed 2 0\nrobot 0 1 2\n");
  EXPECT_THROW(ReadSnapshots(bad), std::runtime_error);
}

TEST(ResultsCsvTest, RoundTrip) {
  std::vector<ResultRow> rows = {Row(0, 0, "proposed", 3), Row(0, 0, "greedy", 4)};
  rows[1].weight_scheme = "none";
  rows[1].connected = false;
  std::stringstream buf;
  WriteResultsCsv(buf, rows);
  EXPECT_EQ(buf.str().substr(0, kResultsHeader.size()), kResultsHeader);
  EXPECT_EQ(ReadResultsCsv(buf), rows);
  std::istringstream bad("a,b\n");
  EXPECT_THROW(ReadResultsCsv(bad), std::runtime_error);
}

TEST(ExperimentTest, NoTargetsMeansNothingObserved) {
  ScenarioConfig c = PresetConfig("small");
  c.num_targets = 0;
  c.rounds = 1;
  c.epochs = 1;
  c.algorithms = {Algorithm::kGreedy};
  const ExperimentResult r = RunExperiment(c);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].observed, 0);
  EXPECT_EQ(r.rows[0].weight_scheme, "none");
}

TEST(ExperimentTest, RowCountAndOrdering) {
  const ScenarioConfig c = Tiny();
  const ExperimentResult r = RunExperiment(c);
  ASSERT_EQ(r.rows.size(), 3u * 2u * 3u);
  EXPECT_EQ(r.rows[0].algorithm, "proposed");
  EXPECT_EQ(r.rows[1].algorithm, "greedy");
  EXPECT_EQ(r.rows[2].algorithm, "sgg");
  EXPECT_EQ(r.rows[0].weight_scheme, "weight2");
  EXPECT_EQ(r.rows.back().round, 2);
  EXPECT_EQ(r.rows.back().epoch, 1);
  for (const ResultRow& row : r.rows) {
    EXPECT_DOUBLE_EQ(row.solve_seconds, 0.0);
    if (row.algorithm == "proposed") EXPECT_TRUE(row.connected);
  }
  EXPECT_TRUE(r.snapshots.empty());
}

TEST(ExperimentTest, SameSeedGivesIdenticalCsv) {
  EXPECT_EQ(CsvOf(Tiny()), CsvOf(Tiny()));
  ScenarioConfig other = Tiny();
  other.seed = 2;
  EXPECT_NE(CsvOf(Tiny()), CsvOf(other));
}

TEST(ExperimentTest, ThreadCountDoesNotChangeOutput) {
  ScenarioConfig one = Tiny();
  one.threads = 1;
  ScenarioConfig four = Tiny();
  four.threads = 4;
  EXPECT_EQ(CsvOf(one), CsvOf(four));
}

TEST(ExperimentTest, SnapshotsCoverEveryEpochAndAlgorithm) {
  ScenarioConfig c = Tiny();
  c.record_snapshots = true;
  const ExperimentResult r = RunExperiment(c);
  EXPECT_EQ(r.snapshots.size(), r.rows.size());
  for (const NetworkSnapshot& s : r.snapshots) {
    EXPECT_EQ(static_cast<int>(s.positions.size()), c.num_robots);
  }
}

TEST(ExperimentTest, InvalidConfigIsRejected) {
  ScenarioConfig c = Tiny();
  c.rounds = 0;
  EXPECT_THROW(RunExperiment(c), ConfigError);
}

}  // namespace
}  // namespace csm
