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

#include "qedge/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qedge {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  // Next whitespace-delimited token, skipping '#' comments to end of line.
  std::string token(const char* what) {
    std::string tok;
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n' && c != '\r') {
        }
        if (!tok.empty()) break;
        continue;
      }
      if (std::isspace(c)) {
        if (!tok.empty()) break;
        continue;
      }
      tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw PgmError(std::string("PGM: unexpected end of file reading ") + what);
    last_delim_ = c;
    return tok;
  }

  long number(const char* what) {
    const std::string tok = token(what);
    long value = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw PgmError(std::string("PGM: invalid ") + what + " '" + tok + "'");
      }
      value = value * 10 + (ch - '0');
      if (value > 1'000'000'000L) throw PgmError(std::string("PGM: ") + what + " too large");
    }
    return value;
  }

  int last_delimiter() const { return last_delim_; }

 private:
  std::istream& in_;
  int last_delim_ = EOF;
};

}  // namespace

GrayImage read_pgm(std::istream& in) {
  HeaderReader header(in);
  const std::string magic = header.token("magic number");
  if (magic != "P2" && magic != "P5") {
    throw PgmError("PGM: unsupported magic '" + magic + "' (expected P2 or P5)");
  }
  const long width = header.number("width");
  const long height = header.number("height");
  const long maxval = header.number("maxval");
  if (width < 1 || height < 1) throw PgmError("PGM: width and height must be positive");
  if (maxval < 1 || maxval > 255) {
    throw PgmError("PGM: maxval " + std::to_string(maxval) + " not in [1, 255]");
  }
  if (width * height > (1L << 28)) throw PgmError("PGM: image too large");

  const auto count = static_cast<std::size_t>(width * height);
  std::vector<Gray> data(count);
  if (magic == "P5") {
    if (header.last_delimiter() == EOF || !std::isspace(header.last_delimiter())) {
      throw PgmError("PGM: missing whitespace after maxval");
    }
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw PgmError("PGM: truncated P5 payload, expected " + std::to_string(count) +
                     " bytes, got " + std::to_string(in.gcount()));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      long v;
      try {
        v = header.number("pixel value");
      } catch (const PgmError&) {
        throw PgmError("PGM: truncated or invalid P2 payload at pixel " + std::to_string(i));
      }
      if (v > maxval) {
        throw PgmError("PGM: pixel value " + std::to_string(v) + " exceeds maxval");
      }
      data[i] = static_cast<Gray>(v);
    }
  }
  if (magic == "P5") {
    for (Gray v : data) {
      if (v > maxval) throw PgmError("PGM: pixel value exceeds maxval");
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgmError("PGM: cannot open '" + path.string() + "'");
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& img, PgmFormat format) {
  out << (format == PgmFormat::Ascii ? "P2" : "P5") << '\n'
      << img.width() << ' ' << img.height() << '\n'
      << 255 << '\n';
  auto data = img.data();
  if (format == PgmFormat::Binary) {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  } else {
    // Netpbm asks for lines of at most 70 characters.
    for (int y = 0; y < img.height(); ++y) {
      std::size_t line = 0;
      for (int x = 0; x < img.width(); ++x) {
        const std::string v = std::to_string(img(x, y));
        if (line > 0 && line + 1 + v.size() > 70) {
          out << '\n';
          line = 0;
        }
        if (line > 0) {
          out << ' ';
          ++line;
        }
        out << v;
        line += v.size();
      }
      out << '\n';
    }
  }
  if (!out) throw PgmError("PGM: write failed");
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path, PgmFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PgmError("PGM: cannot open '" + path.string() + "' for writing");
  write_pgm(out, img, format);
  out.flush();
  if (!out) throw PgmError("PGM: write to '" + path.string() + "' failed");
}

}  // namespace qedge
