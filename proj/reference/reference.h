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

// Slow, literal re-implementations of both bidders and the property
// checkers used by the tests, the acceptance suite and `fpbudget selftest`.
//
// The naive bidders keep the raw round log and recompute every count,
// estimate and active set from it each round. They share nothing with the
// optimized bidders except the random stream and the grid formula.

#ifndef FPBUDGET_REFERENCE_REFERENCE_H_
#define FPBUDGET_REFERENCE_REFERENCE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fpbudget/config.h"
#include "fpbudget/trace.h"

namespace fpbudget::reference {

struct NaiveRound {
  int64_t t = 0;
  std::size_t bid_index = 0;
  double lambda = 0.0;
  bool won = false;
  // One-sided only.
  int value_index = -1;
  int64_t set_count = 0;
};

// The (value, competing bid) pairs Simulate draws for `seed`.
struct Draw {
  double value;
  double competing;
};
std::vector<Draw> DrawStream(const ExperimentConfig& config, uint64_t seed);

std::vector<NaiveRound> NaiveFullFeedback(const ExperimentConfig& config,
                                          const std::vector<Draw>& draws);
std::vector<NaiveRound> NaiveOneSided(const ExperimentConfig& config,
                                      const std::vector<Draw>& draws);

// A small random config for equivalence testing: T <= max_horizon,
// K = M <= 20, random feedback model, control flag, budget and
// distributions.
ExperimentConfig RandomSmallConfig(uint64_t seed, int64_t max_horizon = 2000);

// Dispatches on config.feedback.
std::vector<NaiveRound> NaiveRun(const ExperimentConfig& config,
                                 uint64_t seed);

// Compares a fully retained trace against the naive bidder. Returns an empty
// string on agreement, else a description of the first difference.
std::string CompareWithNaive(const ExperimentConfig& config,
                             const Trace& trace);

// Trace-level properties: spend within budget, multiplier bound and shading
// bound (full feedback), and the one-sided count lower bound
// N_t >= 1 + #{2 <= s < t : shaded_s <= shaded_t}. Needs full records.
std::vector<std::string> CheckTraceInvariants(const ExperimentConfig& config,
                                              const Trace& trace);

// Replays a one-sided run round by round and checks that active sets only
// shrink and that their infima are ordered in m after every pass. Rounds are
// inspected every `stride` rounds (and always at round 2).
std::vector<std::string> CheckActiveSetInvariants(
    const ExperimentConfig& config, uint64_t seed, int64_t stride = 1);

// Replays a one-sided trace with every competing bid known and checks that
// the censored win counts match the fully informed ones.
std::vector<std::string> CheckCensoringSoundness(const ExperimentConfig& config,
                                                 uint64_t seed);

}  // namespace fpbudget::reference

#endif  // FPBUDGET_REFERENCE_REFERENCE_H_
