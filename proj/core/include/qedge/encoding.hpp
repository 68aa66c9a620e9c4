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

#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qedge/image.hpp"

namespace qedge::enc {

/// Phase angles in [0, pi], one per encoded pixel. The length is a power of two.
class AngleVector {
 public:
  AngleVector() = default;
  explicit AngleVector(std::vector<double> angles);
  AngleVector(std::initializer_list<double> angles) : AngleVector(std::vector<double>(angles)) {}

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::span<const double> values() const { return angles_; }
  /// log2(size)
  int qubits() const;

  bool operator==(const AngleVector&) const = default;

 private:
  std::vector<double> angles_;
};

using PhaseVector = std::vector<std::complex<double>>;

/// theta = c * pi / 255. Throws std::invalid_argument outside [0, 255].
double gray_to_angle(int gray);
AngleVector gray_to_angle(std::span<const int> grays);
AngleVector gray_to_angle(std::span<const Gray> grays);

PhaseVector angles_to_phases(const AngleVector& angles);

struct FilterMask {
  std::string name;
  AngleVector weights;
  Direction direction;
};

/// Two-pixel derivative mask, black then white: weights (0, pi).
FilterMask mask_1d(Direction dir);

/// 2x2 derivative masks in raster order. Horizontal is black over white,
/// (0, 0, pi, pi); Vertical is black left of white, (0, pi, 0, pi).
/// Throws for Direction::Diagonal.
FilterMask mask_2d(Direction dir);

}  // namespace qedge::enc
