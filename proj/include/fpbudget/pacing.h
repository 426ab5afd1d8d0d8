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

#ifndef FPBUDGET_PACING_H_
#define FPBUDGET_PACING_H_

namespace fpbudget {

// Dual multiplier on the spend constraint, driven by projected online
// gradient steps: lambda <- max(0, lambda - step * (rho - estimated_cost)).
class DualController {
 public:
  DualController(double step_size, double target_rate)
      : step_(step_size), rho_(target_rate) {}

  void Update(double estimated_cost) {
    const double next = lambda_ - step_ * (rho_ - estimated_cost);
    lambda_ = next > 0.0 ? next : 0.0;
  }

  double lambda() const { return lambda_; }
  double step_size() const { return step_; }
  double target_rate() const { return rho_; }

  // v_bar / rho - 1; the multiplier stays below this when bids never exceed
  // the shaded value and step_size < 1 / rho.
  double UpperBound(double value_bound) const {
    return value_bound / rho_ - 1.0;
  }

 private:
  double lambda_ = 0.0;
  double step_;
  double rho_;
};

}  // namespace fpbudget

#endif  // FPBUDGET_PACING_H_
