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

// Budget-paced bidding with full feedback.
//
// Round 1 bids 0. From round 2 on, the bidder picks the grid bid maximizing
// r(v, b) - lambda * c(b) under the empirical CDF of all past competing bids,
// steps the multiplier with the estimated cost of that bid, then observes
// d_t and pays. Bidding stops once the remaining budget falls below v_bar.
//
// With budget_control = false the multiplier is pinned at 0 and never
// updated; estimators, argmax and the low-budget stop are unchanged.

#ifndef FPBUDGET_FULL_BIDDER_H_
#define FPBUDGET_FULL_BIDDER_H_

#include <cstddef>
#include <cstdint>

#include "fpbudget/config.h"
#include "fpbudget/estimators.h"
#include "fpbudget/grid.h"
#include "fpbudget/pacing.h"
#include "fpbudget/trace.h"

namespace fpbudget {

class FullInfoBidder {
 public:
  explicit FullInfoBidder(const ExperimentConfig& config);

  // Copying would leave the estimator pointing at the source's grid.
  FullInfoBidder(const FullInfoBidder&) = delete;
  FullInfoBidder& operator=(const FullInfoBidder&) = delete;

  // Plays the next round. Throws std::logic_error when halted.
  RoundRecord PlayRound(double value, double competing_bid);

  // Smallest grid index maximizing r - lambda * c at the current multiplier.
  // Requires at least one observed round.
  std::size_t SelectBid(double value) const;

  bool halted() const { return halted_; }
  // Index of the next round to be played (1-based).
  int64_t next_round() const { return round_; }
  double budget() const { return budget_; }
  double lambda() const { return controller_.lambda(); }
  const Grid& bids() const { return bids_; }
  const FullInfoEstimator& estimator() const { return estimator_; }

 private:
  double value_bound_;
  bool budget_control_;
  bool check_lambda_bound_;
  Grid bids_;
  FullInfoEstimator estimator_;
  DualController controller_;
  double budget_;
  int64_t round_ = 1;
  bool halted_ = false;
};

}  // namespace fpbudget

#endif  // FPBUDGET_FULL_BIDDER_H_
