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

#include "fpbudget/simulation.h"

#include <cmath>
#include <type_traits>

#include "fpbudget/full_bidder.h"
#include "fpbudget/one_sided_bidder.h"
#include "fpbudget/random.h"

namespace fpbudget {

std::vector<int64_t> CheckpointRounds(int64_t horizon, int64_t stride) {
  std::vector<int64_t> rounds;
  if (horizon < 1 || stride < 1) return rounds;
  for (int64_t t = stride; t <= horizon; t += stride) rounds.push_back(t);
  if (rounds.empty() || rounds.back() != horizon) rounds.push_back(horizon);
  return rounds;
}

namespace {

template <typename Bidder>
Trace Run(const ExperimentConfig& config, uint64_t seed, bool keep_records) {
  Bidder bidder(config);
  Rng rng(seed);

  Trace trace;
  trace.seed = seed;
  trace.horizon = config.horizon;
  trace.initial_budget = config.budget;
  trace.one_sided = config.feedback == Feedback::kOneSided;
  if (keep_records) {
    trace.records.reserve(static_cast<std::size_t>(config.horizon));
  }

  const std::vector<int64_t> schedule =
      CheckpointRounds(config.horizon, config.log_stride);
  trace.checkpoints.reserve(schedule.size());
  std::size_t next_checkpoint = 0;

  double cumulative_reward = 0.0;
  double cumulative_cost = 0.0;
  RoundRecord last;
  last.budget = config.budget;

  for (int64_t t = 1; t <= config.horizon && !bidder.halted(); ++t) {
    const double value = SampleValue(config.value_dist, config.value_bound, rng);
    const double competing = SampleCompetingBid(config.competing_dist, rng);
    RoundRecord record = bidder.PlayRound(value, competing);

    cumulative_reward += record.reward;
    cumulative_cost += record.cost;
    if (record.one_sided && record.t >= 2) {
      trace.inverse_sqrt_count_sum +=
          1.0 / std::sqrt(static_cast<double>(record.set_count));
    }
    if (next_checkpoint < schedule.size() && schedule[next_checkpoint] == t) {
      trace.sampled.push_back(record);
      trace.checkpoints.push_back(
          {t, cumulative_reward, record.budget, record.lambda});
      ++next_checkpoint;
    }
    trace.tau = t;
    last = record;
    if (keep_records) trace.records.push_back(record);
  }

  // After halting no bids are placed: reward and budget stay frozen.
  for (; next_checkpoint < schedule.size(); ++next_checkpoint) {
    trace.checkpoints.push_back({schedule[next_checkpoint], cumulative_reward,
                                 last.budget, last.lambda});
  }
  // The depletion round is always part of the sampled rows.
  if (trace.tau > 0 &&
      (trace.sampled.empty() || trace.sampled.back().t != trace.tau)) {
    trace.sampled.push_back(last);
  }

  trace.total_reward = cumulative_reward;
  trace.total_cost = cumulative_cost;
  if constexpr (std::is_same_v<Bidder, OneSidedBidder>) {
    trace.empty_set_fallbacks = bidder.empty_set_fallbacks();
    trace.lambda_bound_warnings = bidder.lambda_bound_warnings();
  }
  return trace;
}

}  // namespace

Trace Simulate(const ExperimentConfig& config, uint64_t seed,
               const SimulationOptions& options) {
  config.Validate();
  const bool keep = options.keep_records.value_or(config.horizon <=
                                                  kFullRetentionHorizon);
  if (config.feedback == Feedback::kFull) {
    return Run<FullInfoBidder>(config, seed, keep);
  }
  return Run<OneSidedBidder>(config, seed, keep);
}

}  // namespace fpbudget
