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

#include "fpbudget/grid.h"

#include <cmath>
#include <stdexcept>

namespace fpbudget {

Grid::Grid(int size, double upper) : upper_(upper) {
  if (size < 1) throw std::invalid_argument("grid size must be >= 1");
  if (!(upper > 0.0) || !std::isfinite(upper)) {
    throw std::invalid_argument("grid upper bound must be positive");
  }
  points_.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    points_[i] = static_cast<double>(i) * upper / static_cast<double>(size);
  }
}

std::size_t Grid::FloorIndex(double x) const {
  if (!(x >= 0.0)) throw std::invalid_argument("FloorIndex: x must be >= 0");
  const std::size_t n = points_.size();
  if (x >= upper_) return n - 1;
  const double guess = std::floor(x * static_cast<double>(n) / upper_);
  std::size_t i = guess >= static_cast<double>(n)
                      ? n - 1
                      : static_cast<std::size_t>(guess);
  // The arithmetic guess can be one off at grid points.
  while (i + 1 < n && points_[i + 1] <= x) ++i;
  while (i > 0 && points_[i] > x) --i;
  return i;
}

std::size_t Grid::CeilIndex(double x) const {
  const std::size_t n = points_.size();
  if (x <= 0.0) return 0;
  if (x > points_[n - 1]) return n;
  std::size_t i = FloorIndex(x);
  if (points_[i] < x) ++i;
  return i;
}

}  // namespace fpbudget
