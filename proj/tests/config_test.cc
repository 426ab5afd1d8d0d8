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


#include "fpbudget/config.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

namespace fpbudget {
namespace {

constexpr char kMinimal[] = R"({
  "horizon": 1000, "budget": 10, "value_bound": 1,
  "value_dist": {"family": "normal", "p1": 0.6, "p2": 0.1},
  "competing_dist": {"family": "normal", "p1": 0.4, "p2": 0.1}
})";

TEST(ConfigTest, DefaultsFilledIn) {
  const ExperimentConfig c = ParseConfig(kMinimal);
  EXPECT_EQ(c.horizon, 1000);
  EXPECT_DOUBLE_EQ(c.budget, 10.0);
  EXPECT_DOUBLE_EQ(c.step_size, 1.0 / std::sqrt(1000.0));
  EXPECT_EQ(c.bid_grid, 100);
  EXPECT_EQ(c.value_grid, 100);
  EXPECT_DOUBLE_EQ(c.failure_prob, 0.01);
  EXPECT_EQ(c.repetitions, 20);
  EXPECT_TRUE(c.budget_control);
  EXPECT_EQ(c.feedback, Feedback::kFull);
  EXPECT_DOUBLE_EQ(c.rho(), 0.01);
}

TEST(ConfigTest, FullScaleSetupAccepted) {
  const ExperimentConfig c = ParseConfig(R"({
    "horizon": 1e6, "budget": 1e4, "value_bound": 1,
    "bid_grid": 100, "value_grid": 100, "failure_prob": 0.01,
    "step_size": 0.001, "repetitions": 20,
    "value_dist": {"family": "lognormal", "p1": -0.4, "p2": 0.1},
    "competing_dist": {"family": "normal", "p1": 0.4, "p2": 0.1}
  })");
  EXPECT_EQ(c.horizon, 1000000);
  EXPECT_DOUBLE_EQ(c.rho(), 0.01);
  EXPECT_EQ(c.value_dist.family, Family::kLogNormal);
}

TEST(ConfigTest, RhoAboveValueBoundRejected) {
  try {
    ParseConfig(R"({
      "horizon": 100, "budget": 200, "value_bound": 1,
      "value_dist": {"family": "uniform", "p1": 0, "p2": 1},
      "competing_dist": {"family": "uniform", "p1": 0, "p2": 1}
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("rho exceeds v_bar"),
              std::string::npos);
  }
}

TEST(ConfigTest, MalformedInputsRejected) {
  EXPECT_THROW(ParseConfig("{"), ConfigError);
  EXPECT_THROW(ParseConfig("[]"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"horizon": 10})"), ConfigError);
  // Unknown keys are typos, not extensions.
  std::string typo = kMinimal;
  typo.insert(1, R"("horizn": 5,)");
  EXPECT_THROW(ParseConfig(typo), ConfigError);
  std::string bad_family = kMinimal;
  bad_family.replace(bad_family.find("\"normal\""), 8, "\"cauchy\"");
  EXPECT_THROW(ParseConfig(bad_family), ConfigError);
  std::string negative_sd = kMinimal;
  negative_sd.replace(negative_sd.find("0.1"), 3, "-0.1");
  EXPECT_THROW(ParseConfig(negative_sd), ConfigError);
  std::string fractional = kMinimal;
  fractional.replace(fractional.find("1000"), 4, "10.5");
  EXPECT_THROW(ParseConfig(fractional), ConfigError);
}

TEST(ConfigTest, JsonRoundTripPreservesHash) {
  ExperimentConfig c = ParseConfig(kMinimal);
  c.feedback = Feedback::kOneSided;
  c.seed = 42;
  const ExperimentConfig back = ConfigFromJson(ConfigToJson(c));
  EXPECT_EQ(ConfigHash(back), ConfigHash(c));
  EXPECT_EQ(back.feedback, Feedback::kOneSided);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(ConfigHash(c).size(), 16u);
  c.budget = 11;
  EXPECT_NE(ConfigHash(back), ConfigHash(c));
}

TEST(ConfigTest, NamesRoundTrip) {
  for (Family f : {Family::kNormal, Family::kLogNormal, Family::kUniform,
                   Family::kPointMass}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_EQ(ParseFeedback("onesided"), Feedback::kOneSided);
  EXPECT_THROW(ParseFeedback("partial"), ConfigError);
}

}  // namespace
}  // namespace fpbudget
