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

// Experiment configuration and the distribution families used to draw
// private values and maximum competing bids.
//
// Config documents are JSON objects with the keys
//
//   horizon, budget, value_bound, bid_grid, value_grid, step_size,
//   failure_prob, value_dist {family, p1, p2}, competing_dist {family, p1, p2},
//   repetitions, seed, budget_control, feedback, log_stride
//
// `horizon`, `budget`, `value_dist` and `competing_dist` are required. The
// rest default to value_bound = 1, bid_grid = value_grid = 100,
// step_size = 1/sqrt(horizon), failure_prob = 0.01, repetitions = 20,
// seed = 0, budget_control = true, feedback = "full", log_stride = 1000.

#ifndef FPBUDGET_CONFIG_H_
#define FPBUDGET_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace fpbudget {

// Raised for malformed documents and violated configuration invariants. The
// message always names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { kNormal, kLogNormal, kUniform, kPointMass };

// Normal: (mean, std-dev). LogNormal: (mean, std-dev) of log x.
// Uniform: (lower, upper). PointMass: (atom, unused).
struct DistributionSpec {
  Family family = Family::kPointMass;
  double p1 = 0.0;
  double p2 = 0.0;

  // Throws ConfigError prefixed with `field`.
  void Validate(std::string_view field = "distribution") const;

  static DistributionSpec Normal(double mean, double std_dev) {
    return {Family::kNormal, mean, std_dev};
  }
  static DistributionSpec LogNormal(double log_mean, double log_std_dev) {
    return {Family::kLogNormal, log_mean, log_std_dev};
  }
  static DistributionSpec Uniform(double lower, double upper) {
    return {Family::kUniform, lower, upper};
  }
  static DistributionSpec PointMass(double atom) {
    return {Family::kPointMass, atom, 0.0};
  }
};

std::string FamilyName(Family family);
Family ParseFamily(std::string_view name);

enum class Feedback { kFull, kOneSided };

std::string FeedbackName(Feedback feedback);
Feedback ParseFeedback(std::string_view name);

struct ExperimentConfig {
  int64_t horizon = 0;
  double budget = 0.0;
  double value_bound = 1.0;
  int bid_grid = 100;
  int value_grid = 100;
  double step_size = 0.0;
  double failure_prob = 0.01;
  DistributionSpec value_dist;
  DistributionSpec competing_dist;
  int repetitions = 20;
  uint64_t seed = 0;
  bool budget_control = true;
  Feedback feedback = Feedback::kFull;
  int64_t log_stride = 1000;

  // Target spend per round, B / T.
  double rho() const { return budget / static_cast<double>(horizon); }

  void Validate() const;
};

// Parses and validates a JSON config document.
ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig ConfigFromJson(const nlohmann::json& doc);

// Canonical JSON form; every field is written explicitly.
nlohmann::json ConfigToJson(const ExperimentConfig& config);

// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string ConfigHash(const ExperimentConfig& config);

}  // namespace fpbudget

#endif  // FPBUDGET_CONFIG_H_
