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

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace fpbudget {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 14> kKeys = {
    "horizon",        "budget",       "value_bound", "bid_grid",
    "value_grid",     "step_size",    "failure_prob", "value_dist",
    "competing_dist", "repetitions",  "seed",         "budget_control",
    "feedback",       "log_stride"};

[[noreturn]] void Fail(std::string_view field, std::string_view message) {
  throw ConfigError(std::string(field) + ": " + std::string(message));
}

double GetReal(const json& doc, std::string_view field) {
  const json& v = doc.at(std::string(field));
  if (!v.is_number()) Fail(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) Fail(field, "must be finite");
  return x;
}

int64_t GetInteger(const json& doc, std::string_view field) {
  const json& v = doc.at(std::string(field));
  if (v.is_number_integer()) return v.get<int64_t>();
  if (v.is_number_float()) {
    // Allow 1e6-style literals as long as they are integral.
    const double x = v.get<double>();
    if (std::isfinite(x) && std::floor(x) == x &&
        std::fabs(x) < 9.0e18) {
      return static_cast<int64_t>(x);
    }
  }
  Fail(field, "expected an integer");
}

DistributionSpec GetDistribution(const json& doc, std::string_view field) {
  const json& v = doc.at(std::string(field));
  if (!v.is_object()) Fail(field, "expected an object {family, p1, p2}");
  for (const auto& [key, unused] : v.items()) {
    if (key != "family" && key != "p1" && key != "p2") {
      Fail(field, "unknown key '" + key + "'");
    }
  }
  if (!v.contains("family") || !v.at("family").is_string()) {
    Fail(field, "missing string 'family'");
  }
  DistributionSpec spec;
  try {
    spec.family = ParseFamily(v.at("family").get<std::string>());
  } catch (const ConfigError& e) {
    Fail(field, e.what());
  }
  const std::string prefix(field);
  if (!v.contains("p1")) Fail(prefix + ".p1", "missing");
  spec.p1 = GetReal(v, "p1");
  if (v.contains("p2")) {
    spec.p2 = GetReal(v, "p2");
  } else if (spec.family != Family::kPointMass) {
    Fail(prefix + ".p2", "missing");
  }
  spec.Validate(field);
  return spec;
}

}  // namespace

void DistributionSpec::Validate(std::string_view field) const {
  if (!std::isfinite(p1) || !std::isfinite(p2)) {
    Fail(field, "parameters must be finite");
  }
  switch (family) {
    case Family::kNormal:
    case Family::kLogNormal:
      if (!(p2 > 0.0)) Fail(field, "standard deviation must be positive");
      break;
    case Family::kUniform:
      if (!(p1 < p2)) Fail(field, "uniform requires p1 < p2");
      break;
    case Family::kPointMass:
      break;
  }
}

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kNormal:
      return "normal";
    case Family::kLogNormal:
      return "lognormal";
    case Family::kUniform:
      return "uniform";
    case Family::kPointMass:
      return "pointmass";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  if (name == "normal") return Family::kNormal;
  if (name == "lognormal") return Family::kLogNormal;
  if (name == "uniform") return Family::kUniform;
  if (name == "pointmass") return Family::kPointMass;
  throw ConfigError("unknown distribution family '" + std::string(name) +
                    "'");
}

std::string FeedbackName(Feedback feedback) {
  return feedback == Feedback::kFull ? "full" : "one_sided";
}

Feedback ParseFeedback(std::string_view name) {
  if (name == "full") return Feedback::kFull;
  if (name == "one_sided" || name == "onesided") return Feedback::kOneSided;
  throw ConfigError("feedback: unknown feedback model '" + std::string(name) +
                    "'");
}

void ExperimentConfig::Validate() const {
  if (horizon < 1) Fail("horizon", "must be a positive integer");
  if (!std::isfinite(value_bound) || !(value_bound > 0.0)) {
    Fail("value_bound", "must be positive");
  }
  if (!std::isfinite(budget) || !(budget > 0.0)) {
    Fail("budget", "must be positive");
  }
  if (rho() > value_bound) {
    Fail("budget", "rho = budget / horizon exceeds value_bound (rho exceeds v_bar)");
  }
  if (bid_grid < 1) Fail("bid_grid", "must be >= 1");
  if (value_grid < 1) Fail("value_grid", "must be >= 1");
  if (!std::isfinite(step_size) || !(step_size > 0.0)) {
    Fail("step_size", "must be positive");
  }
  if (!(failure_prob > 0.0 && failure_prob < 1.0)) {
    Fail("failure_prob", "must lie in (0, 1)");
  }
  value_dist.Validate("value_dist");
  competing_dist.Validate("competing_dist");
  if (value_dist.family == Family::kPointMass &&
      (value_dist.p1 < 0.0 || value_dist.p1 > value_bound)) {
    Fail("value_dist", "point mass must lie in [0, value_bound]");
  }
  if (value_dist.family == Family::kUniform &&
      (value_dist.p2 <= 0.0 || value_dist.p1 >= value_bound)) {
    Fail("value_dist", "uniform support does not meet [0, value_bound]");
  }
  if (value_dist.family == Family::kLogNormal && value_bound <= 0.0) {
    Fail("value_dist", "lognormal needs a positive value_bound");
  }
  if (repetitions < 1) Fail("repetitions", "must be >= 1");
  if (log_stride < 1) Fail("log_stride", "must be >= 1");
}

ExperimentConfig ConfigFromJson(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, unused] : doc.items()) {
    bool known = false;
    for (std::string_view k : kKeys) known = known || key == k;
    if (!known) Fail(key, "unknown key");
  }
  for (std::string_view required :
       {"horizon", "budget", "value_dist", "competing_dist"}) {
    if (!doc.contains(std::string(required))) Fail(required, "missing");
  }

  ExperimentConfig config;
  config.horizon = GetInteger(doc, "horizon");
  config.budget = GetReal(doc, "budget");
  if (doc.contains("value_bound")) {
    config.value_bound = GetReal(doc, "value_bound");
  }
  if (doc.contains("bid_grid")) {
    const int64_t k = GetInteger(doc, "bid_grid");
    if (k < 1 || k > std::numeric_limits<int>::max()) {
      Fail("bid_grid", "must be >= 1");
    }
    config.bid_grid = static_cast<int>(k);
  }
  if (doc.contains("value_grid")) {
    const int64_t m = GetInteger(doc, "value_grid");
    if (m < 1 || m > std::numeric_limits<int>::max()) {
      Fail("value_grid", "must be >= 1");
    }
    config.value_grid = static_cast<int>(m);
  }
  if (config.horizon < 1) Fail("horizon", "must be a positive integer");
  config.step_size =
      doc.contains("step_size")
          ? GetReal(doc, "step_size")
          : 1.0 / std::sqrt(static_cast<double>(config.horizon));
  if (doc.contains("failure_prob")) {
    config.failure_prob = GetReal(doc, "failure_prob");
  }
  config.value_dist = GetDistribution(doc, "value_dist");
  config.competing_dist = GetDistribution(doc, "competing_dist");
  if (doc.contains("repetitions")) {
    const int64_t r = GetInteger(doc, "repetitions");
    if (r < 1 || r > std::numeric_limits<int>::max()) {
      Fail("repetitions", "must be >= 1");
    }
    config.repetitions = static_cast<int>(r);
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (s.is_number_unsigned()) {
      config.seed = s.get<uint64_t>();
    } else {
      const int64_t seed = GetInteger(doc, "seed");
      if (seed < 0) Fail("seed", "must be non-negative");
      config.seed = static_cast<uint64_t>(seed);
    }
  }
  if (doc.contains("budget_control")) {
    if (!doc.at("budget_control").is_boolean()) {
      Fail("budget_control", "expected true or false");
    }
    config.budget_control = doc.at("budget_control").get<bool>();
  }
  if (doc.contains("feedback")) {
    if (!doc.at("feedback").is_string()) Fail("feedback", "expected a string");
    config.feedback = ParseFeedback(doc.at("feedback").get<std::string>());
  }
  if (doc.contains("log_stride")) {
    config.log_stride = GetInteger(doc, "log_stride");
  }
  config.Validate();
  return config;
}

ExperimentConfig ParseConfig(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  return ConfigFromJson(doc);
}

json ConfigToJson(const ExperimentConfig& config) {
  auto dist = [](const DistributionSpec& d) {
    return json{{"family", FamilyName(d.family)}, {"p1", d.p1}, {"p2", d.p2}};
  };
  return json{{"horizon", config.horizon},
              {"budget", config.budget},
              {"value_bound", config.value_bound},
              {"bid_grid", config.bid_grid},
              {"value_grid", config.value_grid},
              {"step_size", config.step_size},
              {"failure_prob", config.failure_prob},
              {"value_dist", dist(config.value_dist)},
              {"competing_dist", dist(config.competing_dist)},
              {"repetitions", config.repetitions},
              {"seed", config.seed},
              {"budget_control", config.budget_control},
              {"feedback", FeedbackName(config.feedback)},
              {"log_stride", config.log_stride}};
}

std::string ConfigHash(const ExperimentConfig& config) {
  const std::string text = ConfigToJson(config).dump();
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace fpbudget
