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

#include "qedge/samples.hpp"

#include <stdexcept>

namespace qedge::samples {

namespace {

constexpr Gray kWhite = 255;

void fill(std::vector<Gray>& px, int w, const Rect& r, Gray v) {
  for (int y = r.y0; y <= r.y1; ++y) {
    for (int x = r.x0; x <= r.x1; ++x) px[static_cast<std::size_t>(y * w + x)] = v;
  }
}

}  // namespace

std::vector<Rect> binary_sample_rectangles() {
  return {{2, 2, 5, 4}, {13, 2, 18, 5}, {25, 2, 27, 5}};
}

GrayImage binary_sample() {
  constexpr int n = 30;
  std::vector<Gray> px(n * n, 0);
  // roof
  for (int r = 8; r <= 14; ++r) fill(px, n, {8 - (r - 8), r, 8 + (r - 8), r}, kWhite);
  // house body
  fill(px, n, {3, 15, 13, 24}, kWhite);
  // tree crown and trunk
  for (int r = 9; r <= 17; ++r) {
    const int half = (r - 9) / 2;
    fill(px, n, {21 - half, r, 22 + half, r}, kWhite);
  }
  fill(px, n, {21, 18, 22, 24}, kWhite);
  for (const Rect& r : binary_sample_rectangles()) fill(px, n, r, kWhite);
  return GrayImage(n, n, std::move(px));
}

GrayImage gray_sample() {
  constexpr int n = 30;
  std::vector<Gray> px(n * n);
  auto at = [&](int x, int y) -> Gray& { return px[static_cast<std::size_t>(y * n + x)]; };
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) at(x, y) = static_cast<Gray>(x / 8 + y / 10);
  }
  for (int y = 4; y < 13; ++y) {
    for (int x = 3; x < 14; ++x) at(x, y) = static_cast<Gray>(250 + (x - 3) / 2);
  }
  for (int y = 17; y < 26; ++y) {
    for (int x = 5; x < 12; ++x) at(x, y) = static_cast<Gray>(252 + (y - 17) / 3);
  }
  for (int y = 6; y < 24; ++y) {
    for (int x = 18; x < 27; ++x) at(x, y) = static_cast<Gray>(255 - (y - 6) / 4);
  }
  fill(px, n, {20, 10, 24, 15}, 3);
  return GrayImage(n, n, std::move(px));
}

GrayImage house_scene(int n) {
  if (n < 16) throw std::invalid_argument("house_scene: n must be >= 16");
  std::vector<Gray> px(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto s = [n](int v) { return v * n / 256; };
  auto at = [&](int x, int y) -> Gray& {
    return px[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)];
  };
  auto box = [&](int x0, int y0, int x1, int y1, Gray v) {
    for (int y = s(y0); y < s(y1); ++y) {
      for (int x = s(x0); x < s(x1); ++x) at(x, y) = v;
    }
  };
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      at(x, y) = y >= s(180) ? static_cast<Gray>(80 + ((x + y) % 7) / 3)
                             : static_cast<Gray>(150 + y * 30 / n);
    }
  }
  box(60, 110, 190, 200, 200);
  const int apex = s(125);
  for (int r = 0; r < s(50); ++r) {
    for (int x = apex - r; x <= apex + r; ++x) at(x, s(60) + r) = 60;
  }
  box(80, 130, 110, 160, 20);
  box(140, 130, 170, 160, 20);
  box(115, 150, 140, 200, 100);
  box(215, 120, 225, 190, 70);
  const int cx = s(220);
  const int cy = s(100);
  const int rad = s(30);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if ((y - cy) * (y - cy) + (x - cx) * (x - cx) < rad * rad) at(x, y) = 40;
    }
  }
  return GrayImage(n, n, std::move(px));
}

GrayImage gate_probe_image() {
  std::vector<Gray> px(25);
  for (int i = 0; i < 25; ++i) px[static_cast<std::size_t>(i)] = static_cast<Gray>(3 + 10 * i);
  return GrayImage(5, 5, std::move(px));
}

}  // namespace qedge::samples
