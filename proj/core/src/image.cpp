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

#include "qedge/image.hpp"

#include <algorithm>
#include <cmath>

namespace qedge {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
    case Direction::Diagonal: return "diagonal";
  }
  return "?";
}

namespace {

int reflect(int v, int extent, const char* axis) {
  if (v < -1 || v > extent) {
    throw std::out_of_range(std::string("mirror_value: ") + axis + " = " + std::to_string(v) +
                            " is more than one step outside [0, " + std::to_string(extent) + ")");
  }
  if (v < 0) return 0;
  if (v >= extent) return extent - 1;
  return v;
}

void require_inside(const GrayImage& img, int x, int y, const char* what) {
  if (!img.contains(x, y)) {
    throw std::out_of_range(std::string(what) + ": anchor (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") outside image");
  }
}

}  // namespace

Gray mirror_value(const GrayImage& img, int x, int y) {
  return img(reflect(x, img.width(), "x"), reflect(y, img.height(), "y"));
}

std::pair<Gray, Gray> extract_pair(const GrayImage& img, int x, int y, Direction dir) {
  require_inside(img, x, y, "extract_pair");
  const Offset o = offset_of(dir);
  return {img(x, y), mirror_value(img, x + o.dx, y + o.dy)};
}

std::array<Gray, 4> extract_patch_2x2(const GrayImage& img, int x, int y) {
  require_inside(img, x, y, "extract_patch_2x2");
  return {img(x, y), mirror_value(img, x + 1, y), mirror_value(img, x, y + 1),
          mirror_value(img, x + 1, y + 1)};
}

ProbabilityImage pixelwise_max(std::span<const ProbabilityImage> images) {
  if (images.empty()) throw std::invalid_argument("pixelwise_max: no images");
  const int w = images.front().width();
  const int h = images.front().height();
  std::vector<double> out(images.front().data().begin(), images.front().data().end());
  for (const auto& img : images.subspan(1)) {
    if (img.width() != w || img.height() != h) {
      throw std::invalid_argument("pixelwise_max: dimension mismatch");
    }
    auto src = img.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], src[i]);
  }
  return ProbabilityImage(w, h, std::move(out));
}

OtsuResult otsu_threshold(const GrayImage& img) {
  const Histogram hist = gray_histogram(img);
  const double total = static_cast<double>(img.size());
  double sum_all = 0.0;
  for (int v = 0; v < 256; ++v) sum_all += v * static_cast<double>(hist[v]);

  // sigma_B^2 * N^2 = (N*S0 - n0*S)^2 / (n0 * n1)
  double best = -1.0;
  int best_t = -1;
  double n0 = 0.0;
  double s0 = 0.0;
  for (int t = 0; t < 255; ++t) {
    n0 += static_cast<double>(hist[t]);
    s0 += t * static_cast<double>(hist[t]);
    const double n1 = total - n0;
    if (n0 == 0.0 || n1 == 0.0) continue;
    const double diff = total * s0 - n0 * sum_all;
    const double score = diff * diff / (n0 * n1);
    if (score > best * (1.0 + 1e-12)) {
      best = score;
      best_t = t;
    }
  }

  Gray threshold;
  if (best_t < 0) {
    threshold = img.data().front();  // single occupied bin
  } else {
    threshold = static_cast<Gray>(best_t);
  }
  std::vector<std::uint8_t> edges(img.size());
  auto src = img.data();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = src[i] > threshold ? 1 : 0;
  return {threshold, BinaryImage(img.width(), img.height(), std::move(edges))};
}

Gray probability_to_gray(double p) {
  const double scaled = std::floor(p * 255.0 + 0.5);
  return static_cast<Gray>(std::clamp(scaled, 0.0, 255.0));
}

GrayImage to_gray(const ProbabilityImage& p) {
  std::vector<Gray> out(p.size());
  auto src = p.data();
  std::transform(src.begin(), src.end(), out.begin(), probability_to_gray);
  return GrayImage(p.width(), p.height(), std::move(out));
}

Histogram gray_histogram(const GrayImage& img) {
  Histogram hist{};
  for (Gray v : img.data()) ++hist[v];
  return hist;
}

}  // namespace qedge
