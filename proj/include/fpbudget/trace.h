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

#ifndef FPBUDGET_TRACE_H_
#define FPBUDGET_TRACE_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fpbudget {

// Thrown when a runtime-asserted property of a bidder fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Everything observable about one auction round.
struct RoundRecord {
  int64_t t = 0;
  double value = 0.0;
  // value / (1 + lambda); equals value in baseline mode.
  double shaded_value = 0.0;
  // Multiplier in effect when the bid was chosen.
  double lambda = 0.0;
  std::size_t bid_index = 0;
  double bid = 0.0;
  bool won = false;
  double reward = 0.0;
  double cost = 0.0;
  // Estimated cost of the submitted bid that drove the multiplier update.
  double estimated_cost = 0.0;
  // Remaining budget after the round.
  double budget = 0.0;

  // One-sided feedback only: shaded value index m(t), the count N and the
  // confidence width w of the active set that produced the bid. For t = 1
  // no set exists and value_index is -1.
  bool one_sided = false;
  int value_index = -1;
  int64_t set_count = 0;
  double set_width = 0.0;
};

struct Checkpoint {
  int64_t t = 0;
  double cumulative_reward = 0.0;
  double budget = 0.0;
  double lambda = 0.0;

  double reward_per_round() const {
    return cumulative_reward / static_cast<double>(t);
  }
};

struct Trace {
  uint64_t seed = 0;
  int64_t horizon = 0;
  double initial_budget = 0.0;
  bool one_sided = false;

  // Every played round; empty unless retention was requested.
  std::vector<RoundRecord> records;
  // Rounds at the checkpoint schedule that were actually played.
  std::vector<RoundRecord> sampled;
  // Reward-per-round curve at every checkpoint up to the horizon, including
  // rounds after the budget ran out.
  std::vector<Checkpoint> checkpoints;

  // Last round played (the depletion round when bidding halted early).
  int64_t tau = 0;
  double total_reward = 0.0;
  double total_cost = 0.0;

  // One-sided only: sum over t = 2..tau of N_t^{m(t)}^(-1/2).
  double inverse_sqrt_count_sum = 0.0;
  // One-sided only: active sets rebuilt by the empty-set fallback.
  int64_t empty_set_fallbacks = 0;
  // One-sided only: rounds where lambda exceeded v_bar / rho - 1.
  int64_t lambda_bound_warnings = 0;
};

// Checkpoint rounds: every multiple of `stride` up to `horizon`, plus
// `horizon` itself.
std::vector<int64_t> CheckpointRounds(int64_t horizon, int64_t stride);

}  // namespace fpbudget

#endif  // FPBUDGET_TRACE_H_
