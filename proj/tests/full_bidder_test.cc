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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fpbudget/random.h"
#include "fpbudget/simulation.h"
#include "gtest/gtest.h"

namespace fpbudget {
namespace {

ExperimentConfig Unconstrained(int bids) {
  ExperimentConfig c;
  c.horizon = 1000;
  c.budget = 1000.0;
  c.bid_grid = bids;
  c.value_grid = bids;
  c.step_size = 1.0 / std::sqrt(1000.0);
  c.value_dist = DistributionSpec::Uniform(0, 1);
  c.competing_dist = DistributionSpec::Uniform(0, 1);
  c.budget_control = false;
  return c;
}

// Value 0 always bids 0, so these rounds only feed the estimator.
void Feed(FullInfoBidder& bidder, const std::vector<double>& ds) {
  for (double d : ds) bidder.PlayRound(0.0, d);
}

TEST(FullInfoBidderTest, FirstRoundBidsZero) {
  FullInfoBidder bidder(Unconstrained(100));
  const RoundRecord r = bidder.PlayRound(0.9, 0.0);
  EXPECT_EQ(r.t, 1);
  EXPECT_EQ(r.bid, 0.0);
  EXPECT_TRUE(r.won);
  EXPECT_DOUBLE_EQ(r.reward, 0.9);
  FullInfoBidder loser(Unconstrained(100));
  EXPECT_FALSE(loser.PlayRound(0.9, 0.2).won);
}

TEST(FullInfoBidderTest, SelectsUniqueMaximizer) {
  FullInfoBidder bidder(Unconstrained(100));
  std::vector<double> ds;
  for (int i = 1; i <= 10; ++i) ds.push_back(i / 10.0);
  Feed(bidder, ds);
  const std::size_t k = bidder.SelectBid(1.0);
  EXPECT_DOUBLE_EQ(bidder.bids()[k], 0.5);
}

TEST(FullInfoBidderTest, TiesGoToSmallerBid) {
  FullInfoBidder bidder(Unconstrained(4));
  Feed(bidder, {0.5, 0.75});
  // (1 - 0.5) * 1/2 == (1 - 0.75) * 1.
  EXPECT_EQ(bidder.SelectBid(1.0), 2u);
}

TEST(FullInfoBidderTest, HugeMultiplierBidsZero) {
  ExperimentConfig c = Unconstrained(100);
  c.budget = 10.0;
  c.budget_control = true;
  c.step_size = 1e8;
  FullInfoBidder bidder(c);
  bidder.PlayRound(0.0, 0.3);
  bidder.PlayRound(1.0, 2.0);
  ASSERT_GT(bidder.lambda(), 1e6);
  EXPECT_EQ(bidder.SelectBid(1.0), 0u);
}

// Oracle: exhaustive scan of the empirical objective recomputed from the
// raw history.
TEST(FullInfoBidderTest, MatchesExhaustiveScan) {
  ExperimentConfig c = Unconstrained(50);
  c.horizon = 100000;
  c.budget = 100000.0;
  FullInfoBidder bidder(c);
  Rng rng(3);
  std::vector<double> history;
  for (int t = 0; t < 300; ++t) {
    const double d = 1.2 * rng.Uniform();
    bidder.PlayRound(0.0, d);
    history.push_back(d);
    const double v = rng.Uniform();
    std::size_t best = 0;
    double best_obj = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < bidder.bids().size(); ++k) {
      const double b = bidder.bids()[k];
      double wins = 0;
      for (double s : history) wins += s <= b;
      const double obj = wins / history.size() * (v - b);
      if (obj > best_obj) best_obj = obj, best = k;
    }
    ASSERT_EQ(bidder.SelectBid(v), best) << t;
  }
}

TEST(FullInfoBidderTest, HaltsBelowValueBound) {
  ExperimentConfig c = Unconstrained(100);
  c.horizon = 10;
  c.budget = 1.1;
  FullInfoBidder bidder(c);
  bidder.PlayRound(0.0, 0.3);
  const RoundRecord r = bidder.PlayRound(1.0, 0.0);
  EXPECT_DOUBLE_EQ(r.bid, 0.3);
  EXPECT_NEAR(r.budget, 0.8, 1e-12);
  EXPECT_TRUE(bidder.halted());
  EXPECT_THROW(bidder.PlayRound(1.0, 0.0), std::logic_error);
}

TEST(FullInfoBidderTest, SlackBudgetNeverMovesLambda) {
  ExperimentConfig c = Unconstrained(100);
  c.budget_control = true;
  c.value_dist = DistributionSpec::Normal(0.6, 0.1);
  c.competing_dist = DistributionSpec::Normal(0.4, 0.1);
  const Trace trace = Simulate(c, 5, SimulationOptions{true});
  EXPECT_EQ(trace.tau, c.horizon);
  for (const RoundRecord& r : trace.records) ASSERT_EQ(r.lambda, 0.0);
}

TEST(FullInfoBidderTest, Deterministic) {
  ExperimentConfig c = Unconstrained(100);
  c.budget = 20.0;
  c.budget_control = true;
  const Trace a = Simulate(c, 9, SimulationOptions{true});
  const Trace b = Simulate(c, 9, SimulationOptions{true});
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    ASSERT_EQ(a.records[i].bid_index, b.records[i].bid_index);
    ASSERT_EQ(a.records[i].lambda, b.records[i].lambda);
    ASSERT_EQ(a.records[i].budget, b.records[i].budget);
  }
}

}  // namespace
}  // namespace fpbudget
