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

#include "fpbudget/estimators.h"

#include <cmath>
#include <stdexcept>

namespace fpbudget {

FullInfoEstimator::FullInfoEstimator(const Grid& bids)
    : bids_(&bids),
      bucket_counts_(bids.size() + 1, 0),
      cum_counts_(bids.size(), 0) {}

void FullInfoEstimator::Observe(double d) {
  if (!(d >= 0.0)) {
    throw std::invalid_argument("competing bid must be non-negative");
  }
  // First grid point >= d; size() is the above-grid bucket.
  ++bucket_counts_[bids_->CeilIndex(d)];
  ++rounds_;
  dirty_ = true;
}

void FullInfoEstimator::Refresh() const {
  if (!dirty_) return;
  int64_t running = 0;
  for (std::size_t k = 0; k < cum_counts_.size(); ++k) {
    running += bucket_counts_[k];
    cum_counts_[k] = running;
  }
  dirty_ = false;
}

int64_t FullInfoEstimator::CumulativeCount(std::size_t k) const {
  Refresh();
  return cum_counts_[k];
}

double FullInfoEstimator::WinRate(std::size_t k) const {
  if (rounds_ == 0) {
    throw std::logic_error("FullInfoEstimator queried before any observation");
  }
  return static_cast<double>(CumulativeCount(k)) /
         static_cast<double>(rounds_);
}

Estimate FullInfoEstimator::Estimates(double value, std::size_t k) const {
  const double rate = WinRate(k);
  const double bid = (*bids_)[k];
  return {rate * (value - bid), rate * bid};
}

OneSidedEstimator::OneSidedEstimator(const Grid& bids)
    : bids_(&bids), counts_(bids.size(), 0), wins_(bids.size(), 0) {}

void OneSidedEstimator::Observe(std::size_t bid_index, bool won,
                                std::optional<double> d_if_lost) {
  const std::size_t n = counts_.size();
  if (bid_index >= n) throw std::invalid_argument("bid index out of range");
  if (won && d_if_lost.has_value()) {
    throw std::invalid_argument("a winner does not observe the competing bid");
  }
  if (!won && !d_if_lost.has_value()) {
    throw std::invalid_argument("a loser must report the competing bid");
  }
  const double bid = (*bids_)[bid_index];
  if (!won && !(*d_if_lost > bid)) {
    throw std::invalid_argument("a lost round needs competing bid > own bid");
  }

  for (std::size_t k = bid_index; k < n; ++k) ++counts_[k];
  // A win at b_s resolves 1{b^k >= d_s} = 1 for every b^k >= b_s. A loss
  // reveals d_s, so the indicator holds from the first grid point >= d_s.
  const std::size_t first_win =
      won ? bid_index : bids_->CeilIndex(*d_if_lost);
  for (std::size_t k = first_win; k < n; ++k) ++wins_[k];
  ++rounds_;
}

double OneSidedEstimator::WinRate(std::size_t k) const {
  if (counts_[k] == 0) {
    throw std::logic_error("OneSidedEstimator has no samples at this bid");
  }
  return static_cast<double>(wins_[k]) / static_cast<double>(counts_[k]);
}

OneSidedEstimate OneSidedEstimator::Estimates(double value,
                                              std::size_t k) const {
  const double rate = WinRate(k);
  const double bid = (*bids_)[k];
  return {rate * (value - bid), rate * bid, counts_[k]};
}

double DkwBound(int64_t round, int64_t horizon, double failure_prob,
                double value_bound) {
  if (round < 2) throw std::invalid_argument("DkwBound requires t >= 2");
  return value_bound *
         std::sqrt(std::log(2.0 * static_cast<double>(horizon) / failure_prob) /
                   (2.0 * static_cast<double>(round - 1)));
}

double AzumaWidth(int64_t count, int64_t horizon, int bid_grid,
                  double failure_prob, double value_bound) {
  if (count < 1) throw std::invalid_argument("AzumaWidth requires N >= 1");
  if (horizon < 2) throw std::invalid_argument("AzumaWidth requires T >= 2");
  const double t = static_cast<double>(horizon);
  return value_bound *
         std::sqrt(4.0 * std::log(t) *
                   std::log(static_cast<double>(bid_grid) * t / failure_prob) /
                   static_cast<double>(count));
}

}  // namespace fpbudget
