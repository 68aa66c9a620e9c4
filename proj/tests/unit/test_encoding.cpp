// Copyright 2026 The qedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qedge/encoding.hpp"

namespace {

using namespace qedge;
constexpr double kPi = std::numbers::pi;

TEST(Encoding, GrayToAngleEndpoints) {
  EXPECT_DOUBLE_EQ(enc::gray_to_angle(0), 0.0);
  EXPECT_DOUBLE_EQ(enc::gray_to_angle(255), kPi);
  EXPECT_NEAR(enc::gray_to_angle(128), 128 * kPi / 255, 1e-15);
  EXPECT_THROW(enc::gray_to_angle(-1), std::invalid_argument);
  EXPECT_THROW(enc::gray_to_angle(256), std::invalid_argument);
}

TEST(Encoding, AngleVectorIsMonotone) {
  std::vector<int> g(256);
  for (int i = 0; i < 256; ++i) g[static_cast<std::size_t>(i)] = i;
  const enc::AngleVector v = enc::gray_to_angle(std::span<const int>(g));
  EXPECT_EQ(v.qubits(), 8);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i - 1], v[i]);
}

TEST(Encoding, AngleVectorValidation) {
  EXPECT_THROW(enc::AngleVector({0.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(enc::AngleVector({0.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(enc::AngleVector({}), std::invalid_argument);
  EXPECT_EQ(enc::AngleVector({0.0}).qubits(), 0);
}

TEST(Encoding, PhasesHaveUnitModulus) {
  const enc::AngleVector v({0.0, kPi / 3, kPi / 2, kPi});
  const auto ph = enc::angles_to_phases(v);
  ASSERT_EQ(ph.size(), 4u);
  for (std::size_t i = 0; i < ph.size(); ++i) {
    EXPECT_NEAR(std::abs(ph[i]), 1.0, 1e-15);
    EXPECT_NEAR(std::arg(ph[i]), v[i], 1e-15);
  }
  EXPECT_NEAR(ph[3].real(), -1.0, 1e-15);
}

TEST(Encoding, Masks) {
  const auto m1 = enc::mask_1d(Direction::Vertical);
  EXPECT_EQ(m1.weights, enc::AngleVector({0.0, kPi}));
  EXPECT_EQ(m1.direction, Direction::Vertical);
  EXPECT_EQ(enc::mask_2d(Direction::Horizontal).weights, enc::AngleVector({0.0, 0.0, kPi, kPi}));
  EXPECT_EQ(enc::mask_2d(Direction::Vertical).weights, enc::AngleVector({0.0, kPi, 0.0, kPi}));
  EXPECT_THROW(enc::mask_2d(Direction::Diagonal), std::invalid_argument);
}

}  // namespace
