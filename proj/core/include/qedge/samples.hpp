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

#include <vector>

#include "qedge/image.hpp"

namespace qedge::samples {

/// Inclusive pixel rectangle.
struct Rect {
  int x0;
  int y0;
  int x1;
  int y1;
};

/// 30x30 black/white scene: a house with a triangular roof, a tree and a few
/// free-standing white rectangles.
GrayImage binary_sample();

/// The free-standing rectangles drawn into binary_sample().
std::vector<Rect> binary_sample_rectangles();

/// 30x30 gray scene: near-white shaded blocks on a dark shaded background.
GrayImage gray_sample();

/// n x n gray scene of a house with sky, ground, windows, door and a tree.
/// Throws std::invalid_argument for n < 16.
GrayImage house_scene(int n = 256);

/// 5x5 image with pairwise distinct values.
GrayImage gate_probe_image();

}  // namespace qedge::samples
