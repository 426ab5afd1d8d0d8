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

// Portable seeded sampling. The generator is xoshiro256** seeded through
// splitmix64, so a (seed, spec) pair yields the same stream on every
// platform. Normal variates use the Box-Muller transform on two uniforms;
// no standard-library distribution objects are involved because their
// output is implementation-defined.

#ifndef FPBUDGET_RANDOM_H_
#define FPBUDGET_RANDOM_H_

#include <array>
#include <cstdint>
#include <stdexcept>

#include "fpbudget/config.h"

namespace fpbudget {

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t Next();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();

  double StandardNormal();

 private:
  std::array<uint64_t, 4> state_;
};

// Maximum number of rejected draws before SampleValue gives up.
inline constexpr int kMaxRejections = 1000000;

// Draws a private value in [0, value_bound]. Draws outside the interval are
// rejected and redrawn.
double SampleValue(const DistributionSpec& spec, double value_bound, Rng& rng);

// Draws a maximum competing bid. Negative draws are clamped to 0.
double SampleCompetingBid(const DistributionSpec& spec, Rng& rng);

// P(X <= x) for the untruncated family.
double Cdf(const DistributionSpec& spec, double x);

// CDF of the competing bid after clamping negatives to 0.
double CompetingCdf(const DistributionSpec& spec, double bid);

// CDF of the value distribution restricted and renormalized to
// [0, value_bound], matching what SampleValue produces.
double TruncatedValueCdf(const DistributionSpec& spec, double value_bound,
                         double x);

}  // namespace fpbudget

#endif  // FPBUDGET_RANDOM_H_
