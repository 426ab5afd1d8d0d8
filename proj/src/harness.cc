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
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace fpbudget {

RepetitionError::RepetitionError(uint64_t seed, const std::string& what)
    : std::runtime_error("repetition with seed " + std::to_string(seed) +
                         " failed: " + what),
      seed_(seed) {}

int DefaultWorkers() {
  if (const char* env = std::getenv("FPBUDGET_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<Trace> RunRepetitions(const ExperimentConfig& config, int workers,
                                  const SimulationOptions& options) {
  config.Validate();
  const std::size_t n = static_cast<std::size_t>(config.repetitions);
  std::vector<Trace> traces(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        traces[i] = Simulate(config, config.seed + i, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)),
                              1, n);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw RepetitionError(config.seed + i, e.what());
    }
  }
  return traces;
}

namespace {

// Order-independent mean and sample standard deviation.
void MeanStd(std::vector<double>& xs, double& mean, double& stddev) {
  std::sort(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) {
    stddev = 0.0;
    return;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

AggregateResult Aggregate(std::span<const Trace> traces) {
  AggregateResult result;
  if (traces.empty()) return result;
  const std::size_t points = traces.front().checkpoints.size();
  for (const Trace& trace : traces) {
    if (trace.checkpoints.size() != points) {
      throw std::invalid_argument("traces have different checkpoint schedules");
    }
  }

  std::vector<double> scratch(traces.size());
  double unused = 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    result.t.push_back(traces.front().checkpoints[j].t);
    double mean = 0.0;
    double stddev = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      scratch[i] = traces[i].checkpoints[j].reward_per_round();
    }
    MeanStd(scratch, mean, stddev);
    result.mean_rpr.push_back(mean);
    result.std_rpr.push_back(stddev);
    for (std::size_t i = 0; i < traces.size(); ++i) {
      scratch[i] = traces[i].checkpoints[j].budget;
    }
    MeanStd(scratch, mean, unused);
    result.mean_budget.push_back(mean);
    for (std::size_t i = 0; i < traces.size(); ++i) {
      scratch[i] = traces[i].checkpoints[j].lambda;
    }
    MeanStd(scratch, mean, unused);
    result.mean_lambda.push_back(mean);
  }

  for (std::size_t i = 0; i < traces.size(); ++i) {
    scratch[i] = static_cast<double>(traces[i].tau);
  }
  MeanStd(scratch, result.mean_tau, unused);

  for (const Trace& trace : traces) {
    result.repetitions.push_back(
        {trace.seed, trace.tau, trace.total_reward, trace.total_cost,
         trace.inverse_sqrt_count_sum, trace.empty_set_fallbacks,
         trace.lambda_bound_warnings});
  }
  std::sort(result.repetitions.begin(), result.repetitions.end(),
            [](const RepetitionSummary& a, const RepetitionSummary& b) {
              return a.seed < b.seed;
            });
  return result;
}

AggregateResult RunExperiment(const ExperimentConfig& config, int workers) {
  // Aggregation only needs checkpoints.
  const std::vector<Trace> traces =
      RunRepetitions(config, workers, SimulationOptions{false});
  return Aggregate(traces);
}

double Figure2Threshold(int64_t horizon) {
  const double t = static_cast<double>(horizon);
  return std::sqrt(t * std::log(t));
}

Figure2Row Figure2Check(const ExperimentConfig& config, int workers) {
  if (config.feedback != Feedback::kOneSided || !config.budget_control) {
    throw std::invalid_argument(
        "Figure2Check needs a budget-controlled one-sided config");
  }
  const AggregateResult result = RunExperiment(config, workers);
  std::vector<double> sums;
  for (const auto& rep : result.repetitions) {
    sums.push_back(rep.inverse_sqrt_count_sum);
  }
  std::sort(sums.begin(), sums.end());
  double total = 0.0;
  for (double s : sums) total += s;

  Figure2Row row;
  row.horizon = config.horizon;
  row.mean_sum = total / static_cast<double>(sums.size());
  row.threshold = Figure2Threshold(config.horizon);
  row.pass = row.mean_sum <= row.threshold;
  return row;
}

std::vector<Figure2Row> Figure2Sweep(const ExperimentConfig& config,
                                     int64_t max_horizon, int64_t step,
                                     bool rescale_step_size, int workers) {
  if (step < 1 || max_horizon < step) {
    throw std::invalid_argument("Figure2Sweep needs 1 <= step <= max_horizon");
  }
  std::vector<Figure2Row> rows;
  const double rho = config.rho();
  for (int64_t horizon = step; horizon <= max_horizon; horizon += step) {
    ExperimentConfig c = config;
    c.horizon = horizon;
    c.budget = rho * static_cast<double>(horizon);
    if (rescale_step_size) {
      c.step_size = 1.0 / std::sqrt(static_cast<double>(horizon));
    }
    rows.push_back(Figure2Check(c, workers));
  }
  return rows;
}

}  // namespace fpbudget
