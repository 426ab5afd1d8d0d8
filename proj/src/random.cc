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

#include "fpbudget/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fpbudget {

namespace {

uint64_t SplitMix64(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

double StandardNormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t x = seed;
  for (auto& s : state_) s = SplitMix64(x);
}

uint64_t Rng::Next() {
  const uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

double Rng::Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

double Rng::StandardNormal() {
  // 1 - U lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

double Draw(const DistributionSpec& spec, Rng& rng) {
  switch (spec.family) {
    case Family::kNormal:
      return spec.p1 + spec.p2 * rng.StandardNormal();
    case Family::kLogNormal:
      return std::exp(spec.p1 + spec.p2 * rng.StandardNormal());
    case Family::kUniform:
      return spec.p1 + (spec.p2 - spec.p1) * rng.Uniform();
    case Family::kPointMass:
      return spec.p1;
  }
  return 0.0;
}

}  // namespace

double SampleValue(const DistributionSpec& spec, double value_bound,
                   Rng& rng) {
  for (int i = 0; i < kMaxRejections; ++i) {
    const double v = Draw(spec, rng);
    if (v >= 0.0 && v <= value_bound) return v;
    if (spec.family == Family::kPointMass) break;
  }
  throw SamplingError("value distribution " + FamilyName(spec.family) +
                      " has no usable mass in [0, value_bound]");
}

double SampleCompetingBid(const DistributionSpec& spec, Rng& rng) {
  return std::max(0.0, Draw(spec, rng));
}

double Cdf(const DistributionSpec& spec, double x) {
  switch (spec.family) {
    case Family::kNormal:
      return StandardNormalCdf((x - spec.p1) / spec.p2);
    case Family::kLogNormal:
      if (x <= 0.0) return 0.0;
      return StandardNormalCdf((std::log(x) - spec.p1) / spec.p2);
    case Family::kUniform:
      return std::clamp((x - spec.p1) / (spec.p2 - spec.p1), 0.0, 1.0);
    case Family::kPointMass:
      return x >= spec.p1 ? 1.0 : 0.0;
  }
  return 0.0;
}

double CompetingCdf(const DistributionSpec& spec, double bid) {
  // Clamping moves the negative mass onto 0, so G(b) = P(X <= b) for b >= 0.
  if (bid < 0.0) return 0.0;
  return Cdf(spec, bid);
}

double TruncatedValueCdf(const DistributionSpec& spec, double value_bound,
                         double x) {
  if (x < 0.0) return 0.0;
  if (x >= value_bound) return 1.0;
  if (spec.family == Family::kPointMass) return x >= spec.p1 ? 1.0 : 0.0;
  // P(X < 0) for the atomless families.
  const double low = spec.family == Family::kLogNormal ? 0.0 : Cdf(spec, 0.0);
  const double high = Cdf(spec, value_bound);
  const double mass = high - low;
  if (!(mass > 0.0)) {
    throw SamplingError("value distribution " + FamilyName(spec.family) +
                        " has no mass in [0, value_bound]");
  }
  return (Cdf(spec, x) - low) / mass;
}

}  // namespace fpbudget
