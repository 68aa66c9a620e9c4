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

#include <filesystem>
#include <random>
#include <sstream>

#include "qedge/pgm.hpp"

namespace {

using namespace qedge;

GrayImage random_gray(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Gray> px(static_cast<std::size_t>(w * h));
  for (auto& v : px) v = static_cast<Gray>(rng() & 0xFF);
  return GrayImage(w, h, std::move(px));
}

TEST(Pgm, ReadsAsciiWithComments) {
  std::istringstream in("P2\n# made by hand\n3 2\n# max\n255\n0 1 2\n253 254 255\n");
  const GrayImage img = read_pgm(in);
  EXPECT_EQ(img.width(), 3);
  EXPECT_EQ(img.height(), 2);
  EXPECT_EQ(img(2, 1), 255);
  EXPECT_EQ(img(1, 0), 1);
}

TEST(Pgm, ReadsBinary) {
  std::string bytes = "P5\n2 2\n255\n";
  bytes += std::string{'\x00', '\x7f', '\x80', '\xff'};
  std::istringstream in(bytes);
  const GrayImage img = read_pgm(in);
  EXPECT_EQ(img(0, 0), 0);
  EXPECT_EQ(img(1, 0), 127);
  EXPECT_EQ(img(0, 1), 128);
  EXPECT_EQ(img(1, 1), 255);
}

TEST(Pgm, KeepsValuesBelowMaxval) {
  std::istringstream in("P2 2 1 15 0 15");
  const GrayImage img = read_pgm(in);
  EXPECT_EQ(img(1, 0), 15);
}

TEST(Pgm, Errors) {
  for (const char* text : {"P3\n1 1\n255\n0\n", "P2\n1 1\n256\n0\n", "P2\n2 1\n255\n0\n",
                           "P2\n1 1\n10\n11\n", "P2\n0 1\n255\n", "P5\n2 1\n255\nx"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_pgm(in), PgmError) << text;
  }
  EXPECT_THROW(load_pgm("/nonexistent/dir/x.pgm"), PgmError);
}

TEST(Pgm, RoundTripBothFormats) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const GrayImage img = random_gray(1 + static_cast<int>(seed) * 7, 3 + static_cast<int>(seed), seed);
    for (PgmFormat f : {PgmFormat::Ascii, PgmFormat::Binary}) {
      std::stringstream buf;
      write_pgm(buf, img, f);
      EXPECT_EQ(read_pgm(buf), img);
    }
  }
}

TEST(Pgm, AsciiLinesStayShort) {
  const GrayImage img = random_gray(64, 2, 3);
  std::stringstream buf;
  write_pgm(buf, img);
  std::string line;
  while (std::getline(buf, line)) EXPECT_LE(line.size(), 70u);
}

TEST(Pgm, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "qedge_test_pgm_roundtrip.pgm";
  const GrayImage img = random_gray(5, 4, 11);
  save_pgm(img, path, PgmFormat::Binary);
  EXPECT_EQ(load_pgm(path), img);
  std::filesystem::remove(path);
}

}  // namespace
