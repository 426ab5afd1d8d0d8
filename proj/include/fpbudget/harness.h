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

// Repeated seeded experiments and their aggregation.

#ifndef FPBUDGET_HARNESS_H_
#define FPBUDGET_HARNESS_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fpbudget/config.h"
#include "fpbudget/simulation.h"
#include "fpbudget/trace.h"

namespace fpbudget {

// Wraps a failure inside one repetition with the seed that produced it.
class RepetitionError : public std::runtime_error {
 public:
  RepetitionError(uint64_t seed, const std::string& what);
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
};

struct RepetitionSummary {
  uint64_t seed = 0;
  int64_t tau = 0;
  double total_reward = 0.0;
  double total_cost = 0.0;
  double inverse_sqrt_count_sum = 0.0;
  int64_t empty_set_fallbacks = 0;
  int64_t lambda_bound_warnings = 0;
};

struct AggregateResult {
  std::vector<int64_t> t;
  std::vector<double> mean_rpr;
  std::vector<double> std_rpr;
  std::vector<double> mean_budget;
  std::vector<double> mean_lambda;
  double mean_tau = 0.0;
  // Ordered by seed.
  std::vector<RepetitionSummary> repetitions;

  double final_mean_rpr() const { return mean_rpr.back(); }
};

// Worker count from FPBUDGET_WORKERS, else the hardware concurrency.
int DefaultWorkers();

// Runs config.repetitions simulations with seeds config.seed + i, at most
// `workers` at a time. Results are ordered by repetition index. The first
// failure is rethrown as RepetitionError.
std::vector<Trace> RunRepetitions(const ExperimentConfig& config, int workers,
                                  const SimulationOptions& options = {});

// Mean and sample standard deviation of reward-per-round at every
// checkpoint. Independent of the order of `traces`.
AggregateResult Aggregate(std::span<const Trace> traces);

AggregateResult RunExperiment(const ExperimentConfig& config,
                              int workers = DefaultWorkers());

struct Figure2Row {
  int64_t horizon = 0;
  double mean_sum = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// sqrt(T ln T).
double Figure2Threshold(int64_t horizon);

// Averages sum_{t=2}^{tau} N_t^{m(t)}^(-1/2) over the repetitions of a
// budget-controlled one-sided config and compares it with the threshold.
// Throws std::invalid_argument for other configs.
Figure2Row Figure2Check(const ExperimentConfig& config,
                        int workers = DefaultWorkers());

// Figure2Check at T = step, 2 step, ..., up to max_horizon. The budget is
// rescaled to keep rho fixed and the step size follows 1/sqrt(T) unless the
// config pins it.
std::vector<Figure2Row> Figure2Sweep(const ExperimentConfig& config,
                                     int64_t max_horizon, int64_t step,
                                     bool rescale_step_size = true,
                                     int workers = DefaultWorkers());

}  // namespace fpbudget

#endif  // FPBUDGET_HARNESS_H_
