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

// fpbudget: simulate budget-paced first-price bidders, solve the dual
// benchmark and reproduce the reward-per-round and count-sum experiments.
//
// Machine-readable output (CSV, SVG) goes to files or stdout; progress and
// summaries go to stderr. Exit codes: 0 success, 1 usage error, 2 config
// error, 3 runtime failure, 4 selftest failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpbudget/benchmark.h"
#include "fpbudget/config.h"
#include "fpbudget/harness.h"
#include "fpbudget/output.h"
#include "fpbudget/simulation.h"
#include "reference/reference.h"

namespace {

using fpbudget::ExperimentConfig;

constexpr int kUsageError = 1;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;
constexpr int kSelftestError = 4;

struct Overrides {
  std::optional<int64_t> horizon;
  std::optional<double> budget;
  std::optional<uint64_t> seed;
  std::optional<int> repetitions;
  std::optional<int64_t> log_stride;
  std::optional<std::string> feedback;
  bool no_budget_control = false;
};

void AddOverrideFlags(CLI::App* app, Overrides& o) {
  app->add_option("--horizon", o.horizon, "Override horizon T");
  app->add_option("--budget", o.budget, "Override budget B");
  app->add_option("--seed", o.seed, "Override base seed");
  app->add_option("--reps", o.repetitions, "Override repetitions");
  app->add_option("--log-stride", o.log_stride, "Override log stride");
  app->add_option("--feedback", o.feedback, "full | one_sided")
      ->check(CLI::IsMember({"full", "one_sided", "onesided"}));
  app->add_flag("--no-budget-control", o.no_budget_control,
                "Run the baseline without the multiplier");
}

struct LoadedConfig {
  ExperimentConfig config;
  bool step_size_pinned = false;
};

// Overrides are written into the document before validation, so a flag
// behaves exactly like editing the file.
LoadedConfig LoadConfig(const std::string& path, const Overrides& o) {
  std::ifstream file(path);
  if (!file) throw fpbudget::ConfigError("config: cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw fpbudget::ConfigError(std::string("config: malformed JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw fpbudget::ConfigError("config: expected a JSON object");
  }
  if (o.horizon) doc["horizon"] = *o.horizon;
  if (o.budget) doc["budget"] = *o.budget;
  if (o.seed) doc["seed"] = *o.seed;
  if (o.repetitions) doc["repetitions"] = *o.repetitions;
  if (o.log_stride) doc["log_stride"] = *o.log_stride;
  if (o.feedback) doc["feedback"] = *o.feedback;
  if (o.no_budget_control) doc["budget_control"] = false;
  return {fpbudget::ConfigFromJson(doc), doc.contains("step_size")};
}

std::string ToString(auto write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

int RunSimulate(const ExperimentConfig& config, const std::string& out_dir,
                bool svg) {
  const auto traces = fpbudget::RunRepetitions(
      config, fpbudget::DefaultWorkers(), fpbudget::SimulationOptions{false});
  const double value_step =
      config.value_bound / static_cast<double>(config.value_grid);
  for (const auto& trace : traces) {
    fpbudget::WriteFile(
        out_dir, fpbudget::OutputName("trace", config, trace.seed, "csv"),
        ToString([&](std::ostream& o) {
          fpbudget::WriteTraceCsv(o, trace, value_step);
        }));
  }
  const fpbudget::AggregateResult result = fpbudget::Aggregate(traces);
  const auto path = fpbudget::WriteFile(
      out_dir, fpbudget::OutputName("aggregate", config, config.seed, "csv"),
      ToString([&](std::ostream& o) { fpbudget::WriteAggregateCsv(o, result); }));
  if (svg) {
    fpbudget::Series s;
    s.name = config.budget_control ? "budget control" : "no budget control";
    for (std::size_t j = 0; j < result.t.size(); ++j) {
      s.x.push_back(static_cast<double>(result.t[j]));
      s.y.push_back(result.mean_rpr[j]);
      s.lower.push_back(result.mean_rpr[j] - result.std_rpr[j]);
      s.upper.push_back(result.mean_rpr[j] + result.std_rpr[j]);
    }
    const std::vector<fpbudget::Series> series = {s};
    fpbudget::WriteFile(
        out_dir, fpbudget::OutputName("aggregate", config, config.seed, "svg"),
        ToString([&](std::ostream& o) {
          fpbudget::WriteSvgChart(o, "Reward per round", "t",
                                  "reward per round", series);
        }));
  }
  std::cerr << "simulate: " << config.repetitions << " repetition(s), mean tau "
            << result.mean_tau << ", final mean reward per round "
            << result.final_mean_rpr() << "\nwrote " << path.string() << "\n";
  return 0;
}

int RunBenchmark(const ExperimentConfig& config) {
  const fpbudget::BenchmarkResult result =
      fpbudget::SolveDual(config.value_dist, config.competing_dist,
                          config.value_bound, config.rho());
  const std::vector<fpbudget::BenchmarkResult> rows = {result};
  fpbudget::WriteBenchmarkCsv(std::cout, rows);
  std::cerr << "benchmark: lambda* = " << result.lambda_star
            << ", T * value = "
            << result.per_round_value * static_cast<double>(config.horizon)
            << "\n";
  return 0;
}

int RunFigure1(const ExperimentConfig& base, const std::string& out_dir) {
  for (auto feedback : {fpbudget::Feedback::kFull, fpbudget::Feedback::kOneSided}) {
    ExperimentConfig control = base;
    control.feedback = feedback;
    control.budget_control = true;
    ExperimentConfig baseline = control;
    baseline.budget_control = false;

    const int workers = fpbudget::DefaultWorkers();
    const fpbudget::AggregateResult with = fpbudget::RunExperiment(control, workers);
    const fpbudget::AggregateResult without =
        fpbudget::RunExperiment(baseline, workers);

    const std::string panel =
        "figure1_" + fpbudget::FeedbackName(feedback);
    const std::string csv = ToString([&](std::ostream& o) {
      o << "t,control_mean_rpr,control_std_rpr,baseline_mean_rpr,"
           "baseline_std_rpr\r\n";
      for (std::size_t j = 0; j < with.t.size(); ++j) {
        o << with.t[j] << ',' << with.mean_rpr[j] << ',' << with.std_rpr[j]
          << ',' << without.mean_rpr[j] << ',' << without.std_rpr[j] << "\r\n";
      }
    });
    fpbudget::WriteFile(out_dir,
                        fpbudget::OutputName(panel, control, base.seed, "csv"),
                        csv);

    std::vector<fpbudget::Series> series(2);
    series[0].name = "budget control";
    series[1].name = "no budget control";
    for (std::size_t j = 0; j < with.t.size(); ++j) {
      const double t = static_cast<double>(with.t[j]);
      series[0].x.push_back(t);
      series[0].y.push_back(with.mean_rpr[j]);
      series[0].lower.push_back(with.mean_rpr[j] - with.std_rpr[j]);
      series[0].upper.push_back(with.mean_rpr[j] + with.std_rpr[j]);
      series[1].x.push_back(t);
      series[1].y.push_back(without.mean_rpr[j]);
      series[1].lower.push_back(without.mean_rpr[j] - without.std_rpr[j]);
      series[1].upper.push_back(without.mean_rpr[j] + without.std_rpr[j]);
    }
    fpbudget::WriteFile(
        out_dir, fpbudget::OutputName(panel, control, base.seed, "svg"),
        ToString([&](std::ostream& o) {
          fpbudget::WriteSvgChart(
              o, "Reward per round, " + fpbudget::FeedbackName(feedback) +
                     " feedback",
              "t", "reward per round", series);
        }));
    std::cerr << panel << ": control " << with.final_mean_rpr() << " (mean tau "
              << with.mean_tau << "), baseline " << without.final_mean_rpr()
              << " (mean tau " << without.mean_tau << ")\n";
  }
  return 0;
}

int RunFigure2(const LoadedConfig& loaded, int64_t tmax, int64_t tstep,
               const std::string& out_dir) {
  ExperimentConfig config = loaded.config;
  config.feedback = fpbudget::Feedback::kOneSided;
  config.budget_control = true;
  const auto rows = fpbudget::Figure2Sweep(config, tmax, tstep,
                                           !loaded.step_size_pinned,
                                           fpbudget::DefaultWorkers());
  const std::string csv = ToString(
      [&](std::ostream& o) { fpbudget::WriteFigure2Csv(o, rows); });
  std::cout << csv;
  fpbudget::WriteFile(out_dir,
                      fpbudget::OutputName("figure2", config, config.seed, "csv"),
                      csv);
  bool all = true;
  for (const auto& row : rows) all = all && row.pass;
  std::cerr << "figure2: " << rows.size() << " horizon(s), "
            << (all ? "all below" : "NOT all below") << " sqrt(T ln T)\n";
  return 0;
}

int RunSelftest(int configs) {
  namespace ref = fpbudget::reference;
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (int i = 0; i < configs; ++i) {
    const ExperimentConfig c = ref::RandomSmallConfig(1000 + i, 600);
    const fpbudget::Trace trace =
        fpbudget::Simulate(c, c.seed, fpbudget::SimulationOptions{true});
    const std::string diff = ref::CompareWithNaive(c, trace);
    if (!diff.empty()) {
      ++failures;
      std::cerr << "selftest: config " << i << " differs from naive: " << diff
                << "\n";
    }
    auto violations = ref::CheckTraceInvariants(c, trace);
    if (c.feedback == fpbudget::Feedback::kOneSided) {
      for (auto& v : ref::CheckActiveSetInvariants(c, c.seed)) {
        violations.push_back(v);
      }
      for (auto& v : ref::CheckCensoringSoundness(c, c.seed)) {
        violations.push_back(v);
      }
    }
    for (const auto& v : violations) {
      ++failures;
      std::cerr << "selftest: config " << i << ": " << v << "\n";
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::cerr << "selftest: " << configs << " configs, " << failures
            << " failure(s), " << seconds << " s\n";
  return failures == 0 ? 0 : kSelftestError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-paced bidding in repeated first-price auctions"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  Overrides overrides;

  auto* simulate = app.add_subcommand("simulate", "Run repeated simulations");
  bool svg = false;
  simulate->add_option("--config", config_path, "JSON config")->required();
  simulate->add_option("--out", out_dir, "Output directory");
  simulate->add_flag("--svg", svg, "Also write an SVG chart");
  AddOverrideFlags(simulate, overrides);

  auto* benchmark = app.add_subcommand("benchmark", "Solve the dual benchmark");
  benchmark->add_option("--config", config_path, "JSON config")->required();
  AddOverrideFlags(benchmark, overrides);

  auto* figure1 = app.add_subcommand(
      "figure1", "Controlled vs baseline, both feedback models");
  figure1->add_option("--config", config_path, "JSON config")->required();
  figure1->add_option("--out", out_dir, "Output directory");
  AddOverrideFlags(figure1, overrides);

  auto* figure2 = app.add_subcommand(
      "figure2", "Sum of N^(-1/2) against sqrt(T ln T) over a horizon sweep");
  int64_t tmax = 100000;
  int64_t tstep = 10000;
  figure2->add_option("--config", config_path, "JSON config")->required();
  figure2->add_option("--out", out_dir, "Output directory");
  figure2->add_option("--tmax", tmax, "Largest horizon");
  figure2->add_option("--tstep", tstep, "Horizon step");
  AddOverrideFlags(figure2, overrides);

  auto* selftest = app.add_subcommand(
      "selftest", "Oracle equivalence and invariant checks at small scale");
  int selftest_configs = 20;
  selftest->add_option("--configs", selftest_configs, "Random configs to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (selftest->parsed()) return RunSelftest(selftest_configs);
    const LoadedConfig loaded = LoadConfig(config_path, overrides);
    if (simulate->parsed()) return RunSimulate(loaded.config, out_dir, svg);
    if (benchmark->parsed()) return RunBenchmark(loaded.config);
    if (figure1->parsed()) return RunFigure1(loaded.config, out_dir);
    if (figure2->parsed()) return RunFigure2(loaded, tmax, tstep, out_dir);
  } catch (const fpbudget::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}
