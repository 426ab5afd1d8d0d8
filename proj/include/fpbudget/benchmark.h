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

// Fluid dual benchmark for the budget-constrained first-price problem.
//
// For a multiplier lambda >= 0 the per-round Lagrangian value is
//
//   D(lambda) = E_v[ max_b (v - (1 + lambda) b) G(b) ] + lambda * rho,
//
// with G the CDF of the maximum competing bid. By weak duality
// T * min_lambda D(lambda) upper-bounds the expected reward of every
// budget-feasible strategy, so T * D(lambda*) - reward is an upper bound on
// regret. D is a pointwise max of affine functions of lambda averaged over v,
// hence convex, and is minimized by golden-section search.
//
// The expectation over v uses a midpoint rule on [0, v_bar] whose cell
// weights are exact probabilities of the value distribution truncated to
// [0, v_bar] (the same law SampleValue draws from). The max over b runs over
// a uniform bid grid finer than the bidders' grid.

#ifndef FPBUDGET_BENCHMARK_H_
#define FPBUDGET_BENCHMARK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpbudget/config.h"
#include "fpbudget/grid.h"

namespace fpbudget {

struct BenchmarkOptions {
  int value_points = 10000;
  int bid_points = 1000;
  double lambda_tolerance = 1e-4;
  // Expected cost within this of rho counts as a binding constraint.
  double binding_tolerance = 1e-3;
};

struct BenchmarkResult {
  double rho = 0.0;
  double lambda_star = 0.0;
  // D(lambda_star).
  double per_round_value = 0.0;
  // E_v[b(v) G(b(v))] under the best-bid map at lambda_star.
  double expected_cost = 0.0;
  bool binding = false;
};

class DualProblem {
 public:
  // Throws std::invalid_argument for a non-positive value bound.
  DualProblem(const DistributionSpec& values, const DistributionSpec& competing,
              double value_bound, const BenchmarkOptions& options = {});

  double Objective(double lambda, double rho) const;
  double ExpectedCost(double lambda) const;
  // Throws std::runtime_error if the objective is not finite.
  BenchmarkResult Solve(double rho) const;

  const Grid& bids() const { return bids_; }

 private:
  // Smallest bid index maximizing (v - (1 + lambda) b) G(b).
  std::size_t BestBid(double value, double lambda) const;

  double value_bound_;
  BenchmarkOptions options_;
  Grid bids_;
  std::vector<double> win_prob_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

double DualObjective(double lambda, const DistributionSpec& values,
                     const DistributionSpec& competing, double value_bound,
                     double rho, const BenchmarkOptions& options = {});

BenchmarkResult SolveDual(const DistributionSpec& values,
                          const DistributionSpec& competing, double value_bound,
                          double rho, const BenchmarkOptions& options = {});

// Smallest index maximizing (v - b^k) G(b^k) over `bids`.
std::size_t DiscreteBestBid(double value, const DistributionSpec& competing,
                            const Grid& bids);

// T * per_round_value - reward. An upper bound on regret, not the regret.
double RegretEstimate(double total_reward, const BenchmarkResult& result,
                      int64_t horizon);

}  // namespace fpbudget

#endif  // FPBUDGET_BENCHMARK_H_
