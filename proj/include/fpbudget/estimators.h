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

// Empirical reward and cost estimates over the bid grid.
//
// With full feedback every past competing bid d_s is known, so the win
// probability of grid bid b^k is the empirical CDF #{s : d_s <= b^k} / (t-1).
// With one-sided feedback d_s is only revealed on a loss. The estimate for
// b^k then averages only over rounds whose own bid was at most b^k; for
// those rounds 1{b^k >= d_s} is always resolvable (a win at b_s <= b^k
// implies d_s <= b^k).

#ifndef FPBUDGET_ESTIMATORS_H_
#define FPBUDGET_ESTIMATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fpbudget/grid.h"

namespace fpbudget {

struct Estimate {
  double reward = 0.0;
  double cost = 0.0;
};

class FullInfoEstimator {
 public:
  explicit FullInfoEstimator(const Grid& bids);

  // Records a maximum competing bid d >= 0.
  void Observe(double d);

  int64_t rounds_observed() const { return rounds_; }

  // #{s : d_s <= b^k}.
  int64_t CumulativeCount(std::size_t k) const;

  // Empirical CDF at b^k. Throws std::logic_error before any observation.
  double WinRate(std::size_t k) const;

  // r = G(b^k) (v - b^k), c = G(b^k) b^k.
  Estimate Estimates(double value, std::size_t k) const;

  const Grid& grid() const { return *bids_; }

 private:
  void Refresh() const;

  const Grid* bids_;
  // bucket_counts_[i] counts d in (points[i-1], points[i]]; the extra last
  // slot holds d above the top grid point.
  std::vector<int64_t> bucket_counts_;
  mutable std::vector<int64_t> cum_counts_;
  mutable bool dirty_ = false;
  int64_t rounds_ = 0;
};

struct OneSidedEstimate {
  double reward = 0.0;
  double cost = 0.0;
  int64_t count = 0;
};

class OneSidedEstimator {
 public:
  explicit OneSidedEstimator(const Grid& bids);

  // Records round feedback for a bid at grid index `bid_index`. A winner sees
  // nothing beyond the outcome, so `d_if_lost` must be empty when `won`; a
  // loser sees d, which must then exceed the bid. Throws
  // std::invalid_argument otherwise.
  void Observe(std::size_t bid_index, bool won,
               std::optional<double> d_if_lost);

  int64_t rounds_observed() const { return rounds_; }

  // n^k = #{s : b_s <= b^k}.
  int64_t count(std::size_t k) const { return counts_[k]; }
  // #{s : b_s <= b^k and b^k >= d_s}.
  int64_t wins(std::size_t k) const { return wins_[k]; }

  // wins / count at b^k. Throws std::logic_error when count is zero.
  double WinRate(std::size_t k) const;

  OneSidedEstimate Estimates(double value, std::size_t k) const;

  const Grid& grid() const { return *bids_; }

 private:
  const Grid* bids_;
  std::vector<int64_t> counts_;
  std::vector<int64_t> wins_;
  int64_t rounds_ = 0;
};

// Uniform deviation bound for the full-feedback estimates at round t:
// v_bar * sqrt(ln(2T / delta) / (2 (t - 1))). Requires t >= 2.
double DkwBound(int64_t round, int64_t horizon, double failure_prob,
                double value_bound);

// Confidence width for the one-sided estimates backed by `count` samples:
// v_bar * sqrt(4 ln T ln(K T / delta) / count). Natural logs throughout.
// Requires count >= 1 and T >= 2.
double AzumaWidth(int64_t count, int64_t horizon, int bid_grid,
                  double failure_prob, double value_bound);

}  // namespace fpbudget

#endif  // FPBUDGET_ESTIMATORS_H_
