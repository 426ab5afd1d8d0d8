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

#ifndef FPBUDGET_GRID_H_
#define FPBUDGET_GRID_H_

#include <cstddef>
#include <span>
#include <vector>

namespace fpbudget {

// Uniform grid {i * upper / size : i = 0, ..., size - 1}. Used for both the
// bid grid and the value grid. Indices are 0-based.
class Grid {
 public:
  // Throws std::invalid_argument if size == 0 or upper <= 0.
  Grid(int size, double upper);

  double operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  double upper() const { return upper_; }
  double step() const { return upper_ / static_cast<double>(points_.size()); }
  std::span<const double> points() const { return points_; }

  // Largest i with points[i] <= x; size - 1 when x is beyond the top point.
  // Throws std::invalid_argument for x < 0.
  std::size_t FloorIndex(double x) const;

  // Smallest i with points[i] >= x, or size() when every point is below x.
  std::size_t CeilIndex(double x) const;

 private:
  double upper_;
  std::vector<double> points_;
};

inline Grid MakeGrid(int size, double upper) { return Grid(size, upper); }

}  // namespace fpbudget

#endif  // FPBUDGET_GRID_H_
