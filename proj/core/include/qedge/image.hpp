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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qedge {

using Gray = std::uint8_t;

/// Neighbour relation used to form two-pixel patches.
///
/// Horizontal pairs (x, y) with (x+1, y), Vertical with (x, y+1) and
/// Diagonal with (x+1, y+1).
enum class Direction { Horizontal, Vertical, Diagonal };

struct Offset {
  int dx;
  int dy;
};

constexpr Offset offset_of(Direction d) {
  switch (d) {
    case Direction::Horizontal: return {1, 0};
    case Direction::Vertical: return {0, 1};
    case Direction::Diagonal: return {1, 1};
  }
  return {0, 0};
}

std::string_view to_string(Direction d);

namespace detail {

struct GrayTraits {
  static constexpr bool valid(Gray) { return true; }
  static constexpr const char* name = "GrayImage";
};

struct ProbabilityTraits {
  static constexpr double kTolerance = 1e-12;
  static constexpr bool valid(double p) {
    return p >= -kTolerance && p <= 1.0 + kTolerance;
  }
  static constexpr const char* name = "ProbabilityImage";
};

struct BinaryTraits {
  static constexpr bool valid(std::uint8_t v) { return v <= 1; }
  static constexpr const char* name = "BinaryImage";
};

}  // namespace detail

/// Row-major 2-D grid. Dimensions are fixed at construction and every stored
/// value satisfies Traits::valid.
template <class T, class Traits>
class Image {
 public:
  using value_type = T;

  Image(int width, int height, T fill = T{}) : width_(width), height_(height) {
    check_dims();
    check_value(fill);
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  Image(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims();
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument(std::string(Traits::name) + ": data length " +
                                  std::to_string(data_.size()) + " != width*height");
    }
    for (const T& v : data_) check_value(v);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  T operator()(int x, int y) const { return data_[index(x, y)]; }

  T at(int x, int y) const {
    if (!contains(x, y)) {
      throw std::out_of_range(std::string(Traits::name) + ": (" + std::to_string(x) + ", " +
                              std::to_string(y) + ") outside " + std::to_string(width_) + "x" +
                              std::to_string(height_));
    }
    return data_[index(x, y)];
  }

  void set(int x, int y, T value) {
    if (!contains(x, y)) throw std::out_of_range(std::string(Traits::name) + ": set outside image");
    check_value(value);
    data_[index(x, y)] = value;
  }

  std::span<const T> data() const { return data_; }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  bool operator==(const Image&) const = default;

 private:
  void check_dims() const {
    if (width_ < 1 || height_ < 1) {
      throw std::invalid_argument(std::string(Traits::name) + ": dimensions must be >= 1, got " +
                                  std::to_string(width_) + "x" + std::to_string(height_));
    }
  }
  static void check_value(const T& v) {
    if (!Traits::valid(v)) {
      throw std::invalid_argument(std::string(Traits::name) + ": value out of range");
    }
  }

  int width_;
  int height_;
  std::vector<T> data_;
};

using GrayImage = Image<Gray, detail::GrayTraits>;
using ProbabilityImage = Image<double, detail::ProbabilityTraits>;
/// Edge map; 1 marks an edge pixel.
using BinaryImage = Image<std::uint8_t, detail::BinaryTraits>;

/// Pixel lookup with reflect-at-border padding: x = -1 reads column 0 and
/// x = width reads column width-1 (likewise for y). Coordinates further out
/// throw std::out_of_range.
Gray mirror_value(const GrayImage& img, int x, int y);

/// (I(x,y), I(x+dx, y+dy)) for the given direction, mirrored at the border.
std::pair<Gray, Gray> extract_pair(const GrayImage& img, int x, int y, Direction dir);

/// 2x2 patch anchored at (x,y) in raster order: top-left, top-right,
/// bottom-left, bottom-right. The same order vectorizes the 2-D filter masks.
std::array<Gray, 4> extract_patch_2x2(const GrayImage& img, int x, int y);

ProbabilityImage pixelwise_max(std::span<const ProbabilityImage> images);

struct OtsuResult {
  Gray threshold;
  BinaryImage edges;  // value > threshold
};

/// Global threshold maximizing the between-class variance of the 256-bin
/// histogram. Ties go to the smallest threshold; a constant image returns its
/// own value and an empty edge map.
OtsuResult otsu_threshold(const GrayImage& img);

/// round-half-up of p * 255.
Gray probability_to_gray(double p);
GrayImage to_gray(const ProbabilityImage& p);

using Histogram = std::array<std::uint64_t, 256>;
Histogram gray_histogram(const GrayImage& img);

}  // namespace qedge
