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

// Budget-paced bidding with one-sided (winner-censored) feedback.
//
// Each value grid point v^m owns an active set of candidate bids. Every
// round, for m = 0, 1, ..., M-1 in that order:
//
//   1. bids below the largest infimum of the sets already processed this
//      round (s < m) are dropped, since the best bid is non-decreasing in v;
//   2. N^m is the smallest one-sided count n^k among the survivors and
//      w^m = AzumaWidth(N^m);
//   3. bids whose estimated reward at v^m falls more than 2 w^m below the
//      best survivor are dropped.
//
// The value is then shaded to v / (1 + lambda), floored onto the value grid,
// and the smallest bid of that set is submitted. The low bid keeps future
// counts n^k large; the eliminations keep it close to the best bid.
//
// If step 1 empties a set (only possible when the confidence event fails)
// the set falls back to the single best-estimated bid of its previous
// contents and the event is counted.

#ifndef FPBUDGET_ONE_SIDED_BIDDER_H_
#define FPBUDGET_ONE_SIDED_BIDDER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpbudget/config.h"
#include "fpbudget/estimators.h"
#include "fpbudget/grid.h"
#include "fpbudget/pacing.h"
#include "fpbudget/trace.h"

namespace fpbudget {

// One bitset over the bid grid per value grid point.
class ActiveSets {
 public:
  ActiveSets(int value_grid, int bid_grid);

  std::size_t value_grid() const { return value_grid_; }
  std::size_t bid_grid() const { return bid_grid_; }

  bool Contains(std::size_t m, std::size_t k) const;
  bool Empty(std::size_t m) const;
  std::size_t Size(std::size_t m) const;
  // Smallest member; bid_grid() when empty.
  std::size_t Infimum(std::size_t m) const;
  std::vector<std::size_t> Members(std::size_t m) const;

  // Removes every k < lower from set m.
  void DropBelow(std::size_t m, std::size_t lower);
  void Remove(std::size_t m, std::size_t k);
  void Reset(std::size_t m, std::size_t only_member);

  std::span<const uint64_t> words(std::size_t m) const {
    return {bits_.data() + m * words_per_set_, words_per_set_};
  }

 private:
  std::span<uint64_t> mutable_words(std::size_t m) {
    return {bits_.data() + m * words_per_set_, words_per_set_};
  }

  std::size_t value_grid_;
  std::size_t bid_grid_;
  std::size_t words_per_set_;
  std::vector<uint64_t> bits_;
};

// Floor of v / (1 + lambda) on the value grid.
std::size_t ShadeValue(double value, double lambda, const Grid& values);

class OneSidedBidder {
 public:
  explicit OneSidedBidder(const ExperimentConfig& config);

  OneSidedBidder(const OneSidedBidder&) = delete;
  OneSidedBidder& operator=(const OneSidedBidder&) = delete;

  // Plays the next round. Throws std::logic_error when halted.
  RoundRecord PlayRound(double value, double competing_bid);

  // Runs the per-round elimination pass over all value grid points. Requires
  // at least one observed round.
  void UpdateActiveSets();

  // Smallest surviving bid of set m.
  std::size_t SelectBid(std::size_t m) const;

  bool halted() const { return halted_; }
  int64_t next_round() const { return round_; }
  double budget() const { return budget_; }
  double lambda() const { return controller_.lambda(); }
  const Grid& bids() const { return bids_; }
  const Grid& values() const { return values_; }
  const OneSidedEstimator& estimator() const { return estimator_; }
  const ActiveSets& active_sets() const { return sets_; }
  // N^m and w^m from the latest elimination pass.
  std::span<const int64_t> set_counts() const { return set_counts_; }
  std::span<const double> set_widths() const { return set_widths_; }
  int64_t empty_set_fallbacks() const { return fallbacks_; }
  int64_t lambda_bound_warnings() const { return lambda_warnings_; }

 private:
  double value_bound_;
  bool budget_control_;
  int64_t horizon_;
  double failure_prob_;
  Grid bids_;
  Grid values_;
  OneSidedEstimator estimator_;
  DualController controller_;
  ActiveSets sets_;
  std::vector<int64_t> set_counts_;
  std::vector<double> set_widths_;
  // Per-round scratch.
  std::vector<double> win_rates_;
  std::vector<uint64_t> previous_;
  double budget_;
  int64_t round_ = 1;
  bool halted_ = false;
  int64_t fallbacks_ = 0;
  int64_t lambda_warnings_ = 0;
};

}  // namespace fpbudget

#endif  // FPBUDGET_ONE_SIDED_BIDDER_H_
