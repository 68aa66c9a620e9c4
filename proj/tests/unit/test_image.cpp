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
#include <random>
#include <stdexcept>
#include <vector>

#include "qedge/image.hpp"

namespace {

using namespace qedge;

GrayImage random_gray(int w, int h, std::uint64_t seed, int lo = 0, int hi = 255) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Gray> px(static_cast<std::size_t>(w * h));
  for (auto& v : px) v = static_cast<Gray>(dist(rng));
  return GrayImage(w, h, std::move(px));
}

// Textbook between-class variance with class means, every candidate scanned.
int brute_force_otsu(const GrayImage& img) {
  std::vector<double> hist(256, 0.0);
  for (Gray v : img.data()) hist[v] += 1.0;
  const double n = static_cast<double>(img.size());
  double best = -1.0;
  int best_t = -1;
  for (int t = 0; t < 255; ++t) {
    double w0 = 0, w1 = 0, m0 = 0, m1 = 0;
    for (int v = 0; v <= t; ++v) {
      w0 += hist[v];
      m0 += v * hist[v];
    }
    for (int v = t + 1; v < 256; ++v) {
      w1 += hist[v];
      m1 += v * hist[v];
    }
    if (w0 == 0 || w1 == 0) continue;
    m0 /= w0;
    m1 /= w1;
    const double var = (w0 / n) * (w1 / n) * (m0 - m1) * (m0 - m1);
    if (var > best * (1 + 1e-9)) {
      best = var;
      best_t = t;
    }
  }
  return best_t;
}

TEST(Image, RejectsBadShapes) {
  EXPECT_THROW(GrayImage(0, 3), std::invalid_argument);
  EXPECT_THROW(GrayImage(2, 2, std::vector<Gray>(3)), std::invalid_argument);
  EXPECT_THROW(ProbabilityImage(1, 1, std::vector<double>{1.5}), std::invalid_argument);
  EXPECT_THROW(BinaryImage(1, 1, std::vector<std::uint8_t>{2}), std::invalid_argument);
}

TEST(Image, RasterIndexing) {
  GrayImage img(3, 2, std::vector<Gray>{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(img(2, 0), 2);
  EXPECT_EQ(img(0, 1), 3);
  EXPECT_EQ(img.index(1, 1), 4u);
  EXPECT_THROW(img.at(3, 0), std::out_of_range);
}

TEST(Image, MirrorAtBorder) {
  GrayImage img(3, 2, std::vector<Gray>{10, 20, 30, 40, 50, 60});
  EXPECT_EQ(mirror_value(img, 3, 0), 30);
  EXPECT_EQ(mirror_value(img, 0, 2), 40);
  EXPECT_EQ(mirror_value(img, -1, -1), 10);
  EXPECT_EQ(mirror_value(img, 3, 2), 60);
  EXPECT_THROW(mirror_value(img, 4, 0), std::out_of_range);
}

TEST(Image, PairsAndPatches) {
  GrayImage img(2, 2, std::vector<Gray>{1, 2, 3, 4});
  EXPECT_EQ(extract_pair(img, 0, 0, Direction::Horizontal), std::make_pair(Gray{1}, Gray{2}));
  EXPECT_EQ(extract_pair(img, 0, 0, Direction::Vertical), std::make_pair(Gray{1}, Gray{3}));
  EXPECT_EQ(extract_pair(img, 0, 0, Direction::Diagonal), std::make_pair(Gray{1}, Gray{4}));
  EXPECT_EQ(extract_pair(img, 1, 1, Direction::Diagonal), std::make_pair(Gray{4}, Gray{4}));
  const std::array<Gray, 4> expect{2, 2, 4, 4};
  EXPECT_EQ(extract_patch_2x2(img, 1, 0), expect);
}

TEST(Image, PixelwiseMax) {
  ProbabilityImage a(2, 1, std::vector<double>{0.1, 0.9});
  ProbabilityImage b(2, 1, std::vector<double>{0.5, 0.2});
  std::vector<ProbabilityImage> v{a, b};
  const auto m = pixelwise_max(v);
  EXPECT_DOUBLE_EQ(m(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.9);
  std::vector<ProbabilityImage> bad{a, ProbabilityImage(1, 1)};
  EXPECT_THROW(pixelwise_max(bad), std::invalid_argument);
}

TEST(Image, GrayScaling) {
  EXPECT_EQ(probability_to_gray(0.0), 0);
  EXPECT_EQ(probability_to_gray(1.0), 255);
  EXPECT_EQ(probability_to_gray(0.25), 64);
  EXPECT_EQ(probability_to_gray(0.5), 128);
}

TEST(Otsu, ConstantImageHasNoEdges) {
  GrayImage img(4, 4, Gray{77});
  const auto r = otsu_threshold(img);
  EXPECT_EQ(r.threshold, 77);
  for (auto v : r.edges.data()) EXPECT_EQ(v, 0);
}

TEST(Otsu, TwoLevelsSplitAtLowerLevel) {
  GrayImage img(4, 1, std::vector<Gray>{10, 10, 200, 200});
  const auto r = otsu_threshold(img);
  EXPECT_EQ(r.threshold, 10);
  EXPECT_EQ(r.edges(2, 0), 1);
  EXPECT_EQ(r.edges(1, 0), 0);
}

TEST(Otsu, MatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const GrayImage img = random_gray(9, 7, seed, static_cast<int>(seed % 5) * 20,
                                      100 + static_cast<int>(seed % 7) * 20);
    EXPECT_EQ(otsu_threshold(img).threshold, brute_force_otsu(img)) << "seed " << seed;
  }
}

TEST(Histogram, CountsSumToPixels) {
  const GrayImage img = random_gray(13, 11, 99);
  const auto h = gray_histogram(img);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  EXPECT_EQ(total, img.size());
}

}  // namespace
