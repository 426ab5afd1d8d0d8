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

#include <stdexcept>

#include "gtest/gtest.h"

namespace fpbudget {
namespace {

TEST(GridTest, PointsAreLeftEndpoints) {
  const Grid g(100, 1.0);
  ASSERT_EQ(g.size(), 100u);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_DOUBLE_EQ(g[1], 0.01);
  EXPECT_DOUBLE_EQ(g[99], 0.99);
  const Grid one(1, 1.0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], 0.0);
  const Grid four(4, 2.0);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(four[0], 0.0);
  EXPECT_EQ(four[1], 0.5);
  EXPECT_EQ(four[2], 1.0);
  EXPECT_EQ(four[3], 1.5);
}

TEST(GridTest, InvalidArguments) {
  EXPECT_THROW(Grid(0, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid(10, 0.0), std::invalid_argument);
  EXPECT_THROW(Grid(10, 1.0).FloorIndex(-0.1), std::invalid_argument);
}

TEST(GridTest, FloorIndex) {
  const Grid g(100, 1.0);
  EXPECT_EQ(g.FloorIndex(0.456), 45u);
  EXPECT_EQ(g.FloorIndex(0.0), 0u);
  EXPECT_EQ(g.FloorIndex(1.0), 99u);
  EXPECT_EQ(g.FloorIndex(7.0), 99u);
}

// Brute-force scan as the oracle, including inputs that sit on grid points.
TEST(GridTest, FloorAndCeilMatchScan) {
  for (int size : {1, 3, 7, 100, 1000}) {
    for (double upper : {1.0, 2.0, 0.3}) {
      const Grid g(size, upper);
      for (int j = 0; j <= 3 * size + 5; ++j) {
        for (double x : {j * upper / (3.0 * size), j * upper / size}) {
          std::size_t floor = 0;
          std::size_t ceil = g.size();
          for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] <= x) floor = i;
          }
          for (std::size_t i = g.size(); i-- > 0;) {
            if (g[i] >= x) ceil = i;
          }
          ASSERT_EQ(g.FloorIndex(x), floor) << size << " " << upper << " " << x;
          ASSERT_EQ(g.CeilIndex(x), ceil) << size << " " << upper << " " << x;
        }
      }
    }
  }
}

}  // namespace
}  // namespace fpbudget
