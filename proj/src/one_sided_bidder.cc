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

#include "fpbudget/one_sided_bidder.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fpbudget {

namespace {

constexpr std::size_t kWordBits = 64;

// Calls fn(k) for every set bit of `words`, in increasing k.
template <typename Fn>
void ForEachMember(std::span<const uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    uint64_t bits = words[w];
    while (bits != 0) {
      const int offset = std::countr_zero(bits);
      fn(w * kWordBits + static_cast<std::size_t>(offset));
      bits &= bits - 1;
    }
  }
}

}  // namespace

ActiveSets::ActiveSets(int value_grid, int bid_grid)
    : value_grid_(static_cast<std::size_t>(value_grid)),
      bid_grid_(static_cast<std::size_t>(bid_grid)),
      words_per_set_((bid_grid_ + kWordBits - 1) / kWordBits),
      bits_(value_grid_ * words_per_set_, ~uint64_t{0}) {
  // Clear the padding bits past the last bid.
  const std::size_t tail = bid_grid_ % kWordBits;
  if (tail != 0) {
    for (std::size_t m = 0; m < value_grid_; ++m) {
      mutable_words(m).back() = (uint64_t{1} << tail) - 1;
    }
  }
}

bool ActiveSets::Contains(std::size_t m, std::size_t k) const {
  return (words(m)[k / kWordBits] >> (k % kWordBits)) & 1U;
}

bool ActiveSets::Empty(std::size_t m) const {
  for (uint64_t w : words(m)) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t ActiveSets::Size(std::size_t m) const {
  std::size_t n = 0;
  for (uint64_t w : words(m)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t ActiveSets::Infimum(std::size_t m) const {
  const auto ws = words(m);
  for (std::size_t w = 0; w < ws.size(); ++w) {
    if (ws[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(ws[w]));
    }
  }
  return bid_grid_;
}

std::vector<std::size_t> ActiveSets::Members(std::size_t m) const {
  std::vector<std::size_t> out;
  ForEachMember(words(m), [&](std::size_t k) { out.push_back(k); });
  return out;
}

void ActiveSets::DropBelow(std::size_t m, std::size_t lower) {
  auto ws = mutable_words(m);
  const std::size_t full = std::min(lower / kWordBits, ws.size());
  for (std::size_t w = 0; w < full; ++w) ws[w] = 0;
  if (full < ws.size()) {
    ws[full] &= ~uint64_t{0} << (lower % kWordBits);
  }
}

void ActiveSets::Remove(std::size_t m, std::size_t k) {
  mutable_words(m)[k / kWordBits] &= ~(uint64_t{1} << (k % kWordBits));
}

void ActiveSets::Reset(std::size_t m, std::size_t only_member) {
  auto ws = mutable_words(m);
  std::fill(ws.begin(), ws.end(), 0);
  ws[only_member / kWordBits] = uint64_t{1} << (only_member % kWordBits);
}

std::size_t ShadeValue(double value, double lambda, const Grid& values) {
  return values.FloorIndex(value / (1.0 + lambda));
}

OneSidedBidder::OneSidedBidder(const ExperimentConfig& config)
    : value_bound_(config.value_bound),
      budget_control_(config.budget_control),
      horizon_(config.horizon),
      failure_prob_(config.failure_prob),
      bids_(config.bid_grid, config.value_bound),
      values_(config.value_grid, config.value_bound),
      estimator_(bids_),
      controller_(config.step_size, config.rho()),
      sets_(config.value_grid, config.bid_grid),
      set_counts_(values_.size(), 0),
      set_widths_(values_.size(), 0.0),
      win_rates_(bids_.size(), 0.0),
      budget_(config.budget) {}

void OneSidedBidder::UpdateActiveSets() {
  if (estimator_.rounds_observed() == 0) {
    throw std::logic_error("UpdateActiveSets needs at least one round");
  }
  const std::size_t num_bids = bids_.size();
  for (std::size_t k = 0; k < num_bids; ++k) {
    win_rates_[k] = estimator_.WinRate(k);
  }
  const int bid_grid = static_cast<int>(num_bids);

  // Largest infimum among the sets already updated this round.
  std::size_t lower = 0;
  for (std::size_t m = 0; m < values_.size(); ++m) {
    const double v = values_[m];
    const auto before = sets_.words(m);
    previous_.assign(before.begin(), before.end());

    sets_.DropBelow(m, lower);
    if (sets_.Empty(m)) {
      // Keep the best-estimated bid of the previous set.
      std::size_t best = num_bids;
      double best_reward = 0.0;
      ForEachMember(std::span<const uint64_t>(previous_), [&](std::size_t k) {
        const double r = win_rates_[k] * (v - bids_[k]);
        if (best == num_bids || r > best_reward) {
          best = k;
          best_reward = r;
        }
      });
      sets_.Reset(m, best);
      set_counts_[m] = estimator_.count(best);
      set_widths_[m] = AzumaWidth(set_counts_[m], horizon_, bid_grid,
                                  failure_prob_, value_bound_);
      ++fallbacks_;
      lower = std::max(lower, best);
      continue;
    }

    // Counts are non-decreasing in k, so the minimum sits at the infimum.
    const std::size_t inf = sets_.Infimum(m);
    set_counts_[m] = estimator_.count(inf);
    const double width = AzumaWidth(set_counts_[m], horizon_, bid_grid,
                                    failure_prob_, value_bound_);
    set_widths_[m] = width;

    double best_reward = 0.0;
    bool first = true;
    ForEachMember(sets_.words(m), [&](std::size_t k) {
      const double r = win_rates_[k] * (v - bids_[k]);
      if (first || r > best_reward) best_reward = r;
      first = false;
    });
    const double threshold = best_reward - 2.0 * width;
    // Each word is copied before its bits are visited, so removal is safe.
    ForEachMember(sets_.words(m), [&](std::size_t k) {
      const double r = win_rates_[k] * (v - bids_[k]);
      if (!(r >= threshold)) sets_.Remove(m, k);
    });
    lower = std::max(lower, sets_.Infimum(m));
  }
}

std::size_t OneSidedBidder::SelectBid(std::size_t m) const {
  const std::size_t inf = sets_.Infimum(m);
  if (inf >= bids_.size()) throw std::logic_error("active set is empty");
  return inf;
}

RoundRecord OneSidedBidder::PlayRound(double value, double competing_bid) {
  if (halted_) throw std::logic_error("PlayRound called on a halted bidder");

  RoundRecord record;
  record.t = round_;
  record.value = value;
  record.one_sided = true;
  record.lambda = budget_control_ ? controller_.lambda() : 0.0;
  record.shaded_value = value / (1.0 + record.lambda);

  if (round_ == 1) {
    record.bid_index = 0;
  } else {
    UpdateActiveSets();
    const std::size_t m = ShadeValue(value, record.lambda, values_);
    record.value_index = static_cast<int>(m);
    record.set_count = set_counts_[m];
    record.set_width = set_widths_[m];
    record.bid_index = SelectBid(m);
    record.estimated_cost = estimator_.Estimates(value, record.bid_index).cost;
    if (budget_control_) {
      controller_.Update(record.estimated_cost);
      if (controller_.lambda() > controller_.UpperBound(value_bound_) + 1e-9) {
        ++lambda_warnings_;
      }
    }
  }
  record.bid = bids_[record.bid_index];

  record.won = record.bid >= competing_bid;
  if (record.won) {
    record.reward = value - record.bid;
    record.cost = record.bid;
    estimator_.Observe(record.bid_index, true, std::nullopt);
  } else {
    estimator_.Observe(record.bid_index, false, competing_bid);
  }

  budget_ -= record.cost;
  record.budget = budget_;
  if (budget_ < value_bound_) halted_ = true;
  ++round_;
  return record;
}

}  // namespace fpbudget
