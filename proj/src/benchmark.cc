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

#include "fpbudget/benchmark.h"

#include <cmath>
#include <stdexcept>

#include "fpbudget/random.h"

namespace fpbudget {

DualProblem::DualProblem(const DistributionSpec& values,
                         const DistributionSpec& competing, double value_bound,
                         const BenchmarkOptions& options)
    : value_bound_(value_bound),
      options_(options),
      bids_(options.bid_points, value_bound) {
  if (options.value_points < 1) {
    throw std::invalid_argument("value_points must be >= 1");
  }
  values.Validate("value_dist");
  competing.Validate("competing_dist");

  win_prob_.resize(bids_.size());
  for (std::size_t k = 0; k < bids_.size(); ++k) {
    win_prob_[k] = CompetingCdf(competing, bids_[k]);
  }

  if (values.family == Family::kPointMass) {
    if (values.p1 < 0.0 || values.p1 > value_bound) {
      throw std::invalid_argument("point mass value outside [0, value_bound]");
    }
    nodes_ = {values.p1};
    weights_ = {1.0};
    return;
  }
  const int n = options.value_points;
  const double h = value_bound / n;
  nodes_.resize(n);
  weights_.resize(n);
  double previous = 0.0;
  for (int i = 0; i < n; ++i) {
    nodes_[i] = (i + 0.5) * h;
    const double next =
        i + 1 == n ? 1.0 : TruncatedValueCdf(values, value_bound, (i + 1) * h);
    weights_[i] = next - previous;
    previous = next;
  }
}

std::size_t DualProblem::BestBid(double value, double lambda) const {
  const double scale = 1.0 + lambda;
  std::size_t best = 0;
  double best_objective = value * win_prob_[0];
  // Past v / (1 + lambda) every objective is <= 0 <= the objective at b = 0.
  for (std::size_t k = 1; k < bids_.size() && scale * bids_[k] <= value; ++k) {
    const double objective = (value - scale * bids_[k]) * win_prob_[k];
    if (objective > best_objective) {
      best = k;
      best_objective = objective;
    }
  }
  return best;
}

double DualProblem::Objective(double lambda, double rho) const {
  const double scale = 1.0 + lambda;
  double total = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (weights_[i] == 0.0) continue;
    const std::size_t k = BestBid(nodes_[i], lambda);
    total += weights_[i] * (nodes_[i] - scale * bids_[k]) * win_prob_[k];
  }
  return total + lambda * rho;
}

double DualProblem::ExpectedCost(double lambda) const {
  double total = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (weights_[i] == 0.0) continue;
    const std::size_t k = BestBid(nodes_[i], lambda);
    total += weights_[i] * bids_[k] * win_prob_[k];
  }
  return total;
}

BenchmarkResult DualProblem::Solve(double rho) const {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double lambda) {
    const double value = Objective(lambda, rho);
    if (!std::isfinite(value)) {
      throw std::runtime_error("dual objective is not finite");
    }
    return value;
  };

  double lo = 0.0;
  double hi = value_bound_ / rho;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > options_.lambda_tolerance) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  double lambda = 0.5 * (lo + hi);
  // A minimizer within tolerance of the boundary, or one no better than the
  // boundary, is reported as exactly 0.
  if (lambda <= options_.lambda_tolerance || f(0.0) <= f(lambda)) {
    lambda = 0.0;
  }

  BenchmarkResult result;
  result.rho = rho;
  result.lambda_star = lambda;
  result.per_round_value = f(lambda);
  result.expected_cost = ExpectedCost(lambda);
  result.binding = result.expected_cost >= rho - options_.binding_tolerance;
  return result;
}

double DualObjective(double lambda, const DistributionSpec& values,
                     const DistributionSpec& competing, double value_bound,
                     double rho, const BenchmarkOptions& options) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  return DualProblem(values, competing, value_bound, options)
      .Objective(lambda, rho);
}

BenchmarkResult SolveDual(const DistributionSpec& values,
                          const DistributionSpec& competing, double value_bound,
                          double rho, const BenchmarkOptions& options) {
  return DualProblem(values, competing, value_bound, options).Solve(rho);
}

std::size_t DiscreteBestBid(double value, const DistributionSpec& competing,
                            const Grid& bids) {
  std::size_t best = 0;
  double best_objective = value * CompetingCdf(competing, bids[0]);
  for (std::size_t k = 1; k < bids.size(); ++k) {
    const double objective =
        (value - bids[k]) * CompetingCdf(competing, bids[k]);
    if (objective > best_objective) {
      best = k;
      best_objective = objective;
    }
  }
  return best;
}

double RegretEstimate(double total_reward, const BenchmarkResult& result,
                      int64_t horizon) {
  return static_cast<double>(horizon) * result.per_round_value - total_reward;
}

}  // namespace fpbudget
