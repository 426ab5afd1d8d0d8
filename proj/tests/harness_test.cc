// Copyright 2026 The fpbudget Authors.
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


#include "fpbudget/harness.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fpbudget/benchmark.h"
#include "fpbudget/output.h"
#include "fpbudget/simulation.h"
#include "gtest/gtest.h"

namespace fpbudget {
namespace {

ExperimentConfig StandardSetup(int64_t horizon, double budget) {
  ExperimentConfig c;
  c.horizon = horizon;
  c.budget = budget;
  c.step_size = 1.0 / std::sqrt(static_cast<double>(horizon));
  c.value_dist = DistributionSpec::Normal(0.6, 0.1);
  c.competing_dist = DistributionSpec::Normal(0.4, 0.1);
  c.log_stride = 1000;
  c.repetitions = 4;
  return c;
}

int CountLines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

TEST(CheckpointTest, Schedule) {
  EXPECT_EQ(CheckpointRounds(10, 4), (std::vector<int64_t>{4, 8, 10}));
  EXPECT_EQ(CheckpointRounds(8, 4), (std::vector<int64_t>{4, 8}));
  EXPECT_EQ(CheckpointRounds(3, 10), (std::vector<int64_t>{3}));
}

TEST(SimulateTest, BaselineTailDecaysAsOneOverT) {
  ExperimentConfig c = StandardSetup(100000, 1000.0);
  c.budget_control = false;
  const Trace trace = Simulate(c, 1);
  ASSERT_LT(trace.tau, c.horizon / 2);
  for (const Checkpoint& cp : trace.checkpoints) {
    if (cp.t <= trace.tau) continue;
    EXPECT_DOUBLE_EQ(cp.reward_per_round(),
                     trace.total_reward / static_cast<double>(cp.t));
  }
  EXPECT_LE(trace.total_cost, c.budget);
}

TEST(SimulateTest, RecordsMatchTotals) {
  ExperimentConfig c = StandardSetup(20000, 200.0);
  const Trace trace = Simulate(c, 3, SimulationOptions{true});
  ASSERT_EQ(static_cast<int64_t>(trace.records.size()), trace.tau);
  double reward = 0.0;
  double cost = 0.0;
  for (const RoundRecord& r : trace.records) {
    reward += r.reward;
    cost += r.cost;
  }
  EXPECT_DOUBLE_EQ(reward, trace.total_reward);
  EXPECT_DOUBLE_EQ(cost, trace.total_cost);
  EXPECT_NEAR(trace.records.back().budget, c.budget - cost, 1e-9);
}

TEST(HarnessTest, SingleRepetitionHasZeroSpread) {
  ExperimentConfig c = StandardSetup(20000, 200.0);
  c.repetitions = 1;
  const AggregateResult agg = RunExperiment(c, 1);
  const Trace trace = Simulate(c, c.seed);
  ASSERT_EQ(agg.t.size(), trace.checkpoints.size());
  for (std::size_t j = 0; j < agg.t.size(); ++j) {
    EXPECT_EQ(agg.mean_rpr[j], trace.checkpoints[j].reward_per_round());
    EXPECT_EQ(agg.std_rpr[j], 0.0);
  }
}

TEST(HarnessTest, WorkerCountAndOrderDoNotMatter) {
  ExperimentConfig c = StandardSetup(20000, 200.0);
  c.repetitions = 6;
  std::vector<Trace> serial = RunRepetitions(c, 1);
  const std::vector<Trace> parallel = RunRepetitions(c, 4);
  const AggregateResult a = Aggregate(serial);
  const AggregateResult b = Aggregate(parallel);
  std::reverse(serial.begin(), serial.end());
  std::rotate(serial.begin(), serial.begin() + 2, serial.end());
  const AggregateResult shuffled = Aggregate(serial);
  for (const AggregateResult* other : {&b, &shuffled}) {
    EXPECT_EQ(a.mean_rpr, other->mean_rpr);
    EXPECT_EQ(a.std_rpr, other->std_rpr);
    EXPECT_EQ(a.mean_budget, other->mean_budget);
    EXPECT_EQ(a.mean_lambda, other->mean_lambda);
    EXPECT_EQ(a.mean_tau, other->mean_tau);
  }
  ASSERT_EQ(a.repetitions.size(), 6u);
  EXPECT_EQ(a.repetitions.front().seed, c.seed);
}

TEST(HarnessTest, FailingRepetitionNamesItsSeed) {
  ExperimentConfig c = StandardSetup(100, 1.0);
  c.value_dist = DistributionSpec::Normal(50.0, 0.1);
  c.seed = 17;
  c.repetitions = 2;
  try {
    RunRepetitions(c, 2);
    FAIL() << "expected RepetitionError";
  } catch (const RepetitionError& e) {
    EXPECT_EQ(e.seed(), 17u);
  }
}

TEST(HarnessTest, ControlBeatsBaselineAtDeskScale) {
  ExperimentConfig c = StandardSetup(100000, 1000.0);
  const AggregateResult with = RunExperiment(c);
  c.budget_control = false;
  const AggregateResult without = RunExperiment(c);
  EXPECT_GT(with.final_mean_rpr(), without.final_mean_rpr());
}

TEST(HarnessTest, RegretEstimateOrdersControlAndBaseline) {
  ExperimentConfig c = StandardSetup(100000, 1000.0);
  const BenchmarkResult bench =
      SolveDual(c.value_dist, c.competing_dist, c.value_bound, c.rho());
  const Trace with = Simulate(c, 0);
  c.budget_control = false;
  const Trace without = Simulate(c, 0);
  const double baseline = RegretEstimate(without.total_reward, bench, c.horizon);
  EXPECT_GT(baseline, 0.0);
  EXPECT_GT(baseline, RegretEstimate(with.total_reward, bench, c.horizon));
}

TEST(Figure2Test, Threshold) {
  EXPECT_NEAR(Figure2Threshold(100000), 1072.98, 1e-2);
  // Counts that grow one per round sum to 2 sqrt(T) - 1.46 or so.
  for (int64_t horizon : {100, 1000, 100000}) {
    double sum = 0.0;
    for (int64_t t = 2; t <= horizon; ++t) sum += 1.0 / std::sqrt(t - 1.0);
    EXPECT_NEAR(sum, 2.0 * std::sqrt(static_cast<double>(horizon)), 2.0);
    EXPECT_LE(sum, Figure2Threshold(horizon));
  }
}

TEST(Figure2Test, RequiresControlledOneSided) {
  ExperimentConfig c = StandardSetup(1000, 10.0);
  EXPECT_THROW(Figure2Check(c), std::invalid_argument);
  c.feedback = Feedback::kOneSided;
  c.budget_control = false;
  EXPECT_THROW(Figure2Check(c), std::invalid_argument);
}

TEST(Figure2Test, SweepScalesBudget) {
  ExperimentConfig c = StandardSetup(1000, 10.0);
  c.feedback = Feedback::kOneSided;
  c.bid_grid = c.value_grid = 20;
  c.repetitions = 2;
  const std::vector<Figure2Row> rows = Figure2Sweep(c, 3000, 1000);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].horizon, 3000);
  for (const Figure2Row& row : rows) {
    EXPECT_GT(row.mean_sum, 0.0);
    EXPECT_EQ(row.pass, row.mean_sum <= row.threshold);
  }
}

TEST(OutputTest, TraceCsvRowCount) {
  ExperimentConfig c = StandardSetup(100000, 100000.0);
  const Trace trace = Simulate(c, 0);
  ASSERT_EQ(trace.tau, c.horizon);
  std::ostringstream out;
  WriteTraceCsv(out, trace, 0.01);
  const std::string csv = out.str();
  EXPECT_EQ(CountLines(csv), 101);
  EXPECT_EQ(csv.rfind("t,value,lambda,bid,won,reward,cost,budget\r\n", 0), 0u);
}

TEST(OutputTest, OneSidedTraceColumns) {
  ExperimentConfig c = StandardSetup(50, 5.0);
  c.feedback = Feedback::kOneSided;
  c.log_stride = 1;
  c.bid_grid = c.value_grid = 10;
  const Trace trace = Simulate(c, 0);
  std::ostringstream out;
  WriteTraceCsv(out, trace, 0.1);
  std::istringstream lines(out.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "t,value,lambda,bid,won,reward,cost,budget,m,N,w\r");
  EXPECT_EQ(first.substr(first.size() - 4), ",,,\r");
  EXPECT_EQ(std::count(second.begin(), second.end(), ','), 10);
}

TEST(OutputTest, AggregateAndBenchmarkCsv) {
  ExperimentConfig c = StandardSetup(5000, 50.0);
  c.repetitions = 3;
  std::ostringstream agg;
  WriteAggregateCsv(agg, RunExperiment(c, 1));
  EXPECT_EQ(agg.str().rfind("t,mean_rpr,std_rpr,mean_budget,mean_lambda\r\n", 0),
            0u);
  EXPECT_EQ(CountLines(agg.str()), 6);
  std::ostringstream bench;
  const std::vector<BenchmarkResult> rows = {BenchmarkResult{}};
  WriteBenchmarkCsv(bench, rows);
  EXPECT_EQ(bench.str(),
            "rho,lambda_star,per_round_value,expected_cost,binding\r\n"
            "0,0,0,0,false\r\n");
}

TEST(OutputTest, SvgIsWellFormed) {
  std::vector<Series> series(2);
  series[0] = {"budget control", {1, 2, 3}, {0.1, 0.2, 0.15}, {0, 0.1, 0.1},
               {0.2, 0.3, 0.2}};
  series[1] = {"a < b & c", {1, 2, 3}, {0.3, 0.1, 0.05}, {}, {}};
  std::ostringstream out;
  WriteSvgChart(out, "Reward per round", "t", "reward", series);
  const std::string svg = out.str();
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 500\""), std::string::npos);
  EXPECT_NE(svg.find("a &lt; b &amp; c"), std::string::npos);
  EXPECT_EQ(svg.find("a < b"), std::string::npos);
  auto count = [&](const std::string& tag) {
    int n = 0;
    for (auto pos = svg.find(tag); pos != std::string::npos;
         pos = svg.find(tag, pos + 1)) {
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count("<polyline"), 2);
  EXPECT_EQ(count("<polygon"), 1);
  EXPECT_EQ(count("<svg"), 1);
  EXPECT_EQ(count("</svg>"), 1);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
}

TEST(OutputTest, FilesAndNames) {
  const auto dir = std::filesystem::temp_directory_path() / "fpbudget_out_test";
  std::filesystem::remove_all(dir);
  const auto path = WriteFile(dir / "nested", "x.csv", "a,b\r\n");
  EXPECT_TRUE(std::filesystem::exists(path));
  EXPECT_THROW(WriteFile(path, "y.csv", ""), OutputError);
  std::filesystem::remove_all(dir);

  const ExperimentConfig c = StandardSetup(1000, 10.0);
  EXPECT_EQ(OutputName("trace", c, 7, "csv"),
            "trace_" + ConfigHash(c) + "_s7.csv");
}

}  // namespace
}  // namespace fpbudget
