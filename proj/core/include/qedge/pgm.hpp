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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qedge/image.hpp"

namespace qedge {

enum class PgmFormat { Ascii /* P2 */, Binary /* P5 */ };

class PgmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Readers accept P2 and P5 with maxval <= 255 and '#' comments in the header.
// Pixel values are returned as stored; no rescaling to 255 takes place.
GrayImage read_pgm(std::istream& in);
GrayImage load_pgm(const std::filesystem::path& path);

// Writers always emit maxval 255.
void write_pgm(std::ostream& out, const GrayImage& img, PgmFormat format = PgmFormat::Ascii);
void save_pgm(const GrayImage& img, const std::filesystem::path& path,
              PgmFormat format = PgmFormat::Ascii);

}  // namespace qedge
