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

#include "fpbudget/full_bidder.h"

#include <stdexcept>
#include <string>

namespace fpbudget {

namespace {

constexpr double kLambdaSlack = 1e-9;

}  // namespace

FullInfoBidder::FullInfoBidder(const ExperimentConfig& config)
    : value_bound_(config.value_bound),
      budget_control_(config.budget_control),
      // The multiplier bound is only guaranteed for step sizes below 1 / rho.
      check_lambda_bound_(config.budget_control &&
                          config.step_size * config.rho() < 1.0),
      bids_(config.bid_grid, config.value_bound),
      estimator_(bids_),
      controller_(config.step_size, config.rho()),
      budget_(config.budget) {}

std::size_t FullInfoBidder::SelectBid(double value) const {
  const double lambda = budget_control_ ? controller_.lambda() : 0.0;
  std::size_t best = 0;
  double best_objective = 0.0;
  for (std::size_t k = 0; k < bids_.size(); ++k) {
    const Estimate e = estimator_.Estimates(value, k);
    const double objective = e.reward - lambda * e.cost;
    if (k == 0 || objective > best_objective) {
      best = k;
      best_objective = objective;
    }
  }
  return best;
}

RoundRecord FullInfoBidder::PlayRound(double value, double competing_bid) {
  if (halted_) throw std::logic_error("PlayRound called on a halted bidder");

  RoundRecord record;
  record.t = round_;
  record.value = value;
  record.lambda = budget_control_ ? controller_.lambda() : 0.0;
  record.shaded_value = value / (1.0 + record.lambda);

  if (round_ == 1) {
    record.bid_index = 0;
  } else {
    record.bid_index = SelectBid(value);
    record.estimated_cost = estimator_.Estimates(value, record.bid_index).cost;
    if (budget_control_) {
      controller_.Update(record.estimated_cost);
      if (check_lambda_bound_ &&
          controller_.lambda() >
              controller_.UpperBound(value_bound_) + kLambdaSlack) {
        throw InvariantViolation(
            "multiplier " + std::to_string(controller_.lambda()) +
            " exceeds v_bar / rho - 1 at round " + std::to_string(round_));
      }
    }
  }
  record.bid = bids_[record.bid_index];

  // Ties go to the bidder.
  record.won = record.bid >= competing_bid;
  if (record.won) {
    record.reward = value - record.bid;
    record.cost = record.bid;
  }
  estimator_.Observe(competing_bid);

  budget_ -= record.cost;
  record.budget = budget_;
  if (budget_ < value_bound_) halted_ = true;
  ++round_;
  return record;
}

}  // namespace fpbudget
