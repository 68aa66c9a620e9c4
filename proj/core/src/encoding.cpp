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

#include "qedge/encoding.hpp"

#include <bit>
#include <stdexcept>

namespace qedge::enc {

namespace {
constexpr double kAngleSlack = 1e-12;
}

AngleVector::AngleVector(std::vector<double> angles) : angles_(std::move(angles)) {
  if (angles_.empty() || !std::has_single_bit(angles_.size())) {
    throw std::invalid_argument("AngleVector: length " + std::to_string(angles_.size()) +
                                " is not a power of two");
  }
  for (double a : angles_) {
    if (!(a >= -kAngleSlack && a <= std::numbers::pi + kAngleSlack)) {
      throw std::invalid_argument("AngleVector: angle " + std::to_string(a) +
                                  " outside [0, pi]");
    }
  }
}

int AngleVector::qubits() const { return std::countr_zero(angles_.size()); }

double gray_to_angle(int gray) {
  if (gray < 0 || gray > 255) {
    throw std::invalid_argument("gray_to_angle: value " + std::to_string(gray) +
                                " outside [0, 255]");
  }
  return gray * std::numbers::pi / 255.0;
}

AngleVector gray_to_angle(std::span<const int> grays) {
  std::vector<double> out;
  out.reserve(grays.size());
  for (int g : grays) out.push_back(gray_to_angle(g));
  return AngleVector(std::move(out));
}

AngleVector gray_to_angle(std::span<const Gray> grays) {
  std::vector<double> out;
  out.reserve(grays.size());
  for (Gray g : grays) out.push_back(gray_to_angle(g));
  return AngleVector(std::move(out));
}

PhaseVector angles_to_phases(const AngleVector& angles) {
  PhaseVector out;
  out.reserve(angles.size());
  for (double a : angles.values()) out.push_back(std::polar(1.0, a));
  return out;
}

FilterMask mask_1d(Direction dir) {
  return {std::string("1d-") + std::string(to_string(dir)), AngleVector{0.0, std::numbers::pi},
          dir};
}

FilterMask mask_2d(Direction dir) {
  constexpr double pi = std::numbers::pi;
  switch (dir) {
    case Direction::Horizontal: return {"2d-horizontal", AngleVector{0.0, 0.0, pi, pi}, dir};
    case Direction::Vertical: return {"2d-vertical", AngleVector{0.0, pi, 0.0, pi}, dir};
    case Direction::Diagonal: break;
  }
  throw std::invalid_argument("mask_2d: no 2x2 mask for the diagonal direction");
}

}  // namespace qedge::enc
