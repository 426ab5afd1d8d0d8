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

#ifndef FPBUDGET_SIMULATION_H_
#define FPBUDGET_SIMULATION_H_

#include <cstdint>
#include <optional>

#include "fpbudget/config.h"
#include "fpbudget/trace.h"

namespace fpbudget {

// Horizons up to this size keep every round in Trace::records by default.
inline constexpr int64_t kFullRetentionHorizon = 100000;

struct SimulationOptions {
  // Overrides the default retention rule when set.
  std::optional<bool> keep_records;
};

// Runs one repetition with the bidder selected by config.feedback. Each round
// draws the value and then the competing bid from a generator seeded with
// `seed`.
Trace Simulate(const ExperimentConfig& config, uint64_t seed,
               const SimulationOptions& options = {});

}  // namespace fpbudget

#endif  // FPBUDGET_SIMULATION_H_
