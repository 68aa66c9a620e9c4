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

#include <set>

#include "qedge/samples.hpp"

namespace {

using namespace qedge;

TEST(Samples, BinaryIsBlackAndWhite) {
  const GrayImage img = samples::binary_sample();
  EXPECT_EQ(img.width(), 30);
  EXPECT_EQ(img.height(), 30);
  for (Gray v : img.data()) EXPECT_TRUE(v == 0 || v == 255);
}

// Each listed rectangle is white and surrounded by a black ring two pixels
// wide that stays inside the image.
TEST(Samples, RectanglesStandFree) {
  const GrayImage img = samples::binary_sample();
  for (const auto& r : samples::binary_sample_rectangles()) {
    ASSERT_GE(r.x0, 2);
    ASSERT_GE(r.y0, 2);
    ASSERT_LE(r.x1, img.width() - 3);
    ASSERT_LE(r.y1, img.height() - 3);
    for (int y = r.y0 - 2; y <= r.y1 + 2; ++y) {
      for (int x = r.x0 - 2; x <= r.x1 + 2; ++x) {
        const bool inside = x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1;
        EXPECT_EQ(img(x, y), inside ? 255 : 0) << x << "," << y;
      }
    }
  }
}

TEST(Samples, GrayHasManyLevels) {
  const GrayImage img = samples::gray_sample();
  std::set<Gray> levels(img.data().begin(), img.data().end());
  EXPECT_GT(levels.size(), 10u);
  EXPECT_EQ(img(0, 0), 0);
  EXPECT_EQ(img(13, 4), 255);
}

TEST(Samples, HouseScene) {
  const GrayImage img = samples::house_scene();
  EXPECT_EQ(img.width(), 256);
  EXPECT_EQ(img(125, 60), 60);
  EXPECT_EQ(img(220, 100), 40);
  EXPECT_EQ(img(100, 150), 20);
  EXPECT_EQ(samples::house_scene(64).width(), 64);
  EXPECT_THROW(samples::house_scene(8), std::invalid_argument);
}

TEST(Samples, ProbeValuesDistinct) {
  const GrayImage img = samples::gate_probe_image();
  std::set<Gray> levels(img.data().begin(), img.data().end());
  EXPECT_EQ(levels.size(), img.size());
}

}  // namespace
