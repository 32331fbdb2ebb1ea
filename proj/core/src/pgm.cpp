// Copyright 2026 The fuzzdenoise Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzdenoise/pgm.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <vector>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Scanner {
 public:
  explicit Scanner(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (!at_end()) {
      const char c = bytes_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token preceded by optional whitespace/comments.
  std::uint64_t read_uint(const char* what) {
    skip_space_and_comments();
    if (at_end()) {
      throw PgmParseError(std::string("unexpected end of data reading ") + what,
                          pos_);
    }
    if (!is_digit(bytes_[pos_])) {
      throw PgmParseError(std::string("expected decimal ") + what, pos_);
    }
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (!at_end() && is_digit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw PgmParseError(std::string(what) + " is out of range", start);
      }
      ++pos_;
    }
    if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw PgmParseError(std::string("malformed ") + what, pos_);
    }
    return value;
  }

  void advance(std::size_t n) { pos_ += n; }
  char peek() const { return bytes_[pos_]; }
  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmParseError("malformed magic number, expected P2 or P5", 0);
  }
  const bool binary = bytes[1] == '5';
  Scanner scan(bytes);
  scan.advance(2);
  if (!scan.at_end() && !is_space(scan.peek()) && scan.peek() != '#') {
    throw PgmParseError("malformed magic number, expected P2 or P5", 0);
  }

  const std::size_t width_pos = scan.pos();
  const auto width = scan.read_uint("width");
  const auto height = scan.read_uint("height");
  if (width == 0 || height == 0) {
    throw PgmParseError("image dimensions must be positive", width_pos);
  }
  scan.skip_space_and_comments();
  const std::size_t maxval_pos = scan.pos();
  const auto maxval = scan.read_uint("maxval");
  if (maxval != 255) {
    throw PgmParseError("unsupported maxval " + std::to_string(maxval) +
                            ", only 255 is accepted",
                        maxval_pos);
  }

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> data;
  data.reserve(count);

  if (binary) {
    if (scan.at_end()) {
      throw PgmParseError("truncated payload: missing separator after maxval",
                          scan.pos());
    }
    if (!is_space(scan.peek())) {
      throw PgmParseError("expected a single whitespace byte after maxval",
                          scan.pos());
    }
    scan.advance(1);  // the single whitespace byte ending the header
    const std::string_view payload = scan.rest();
    if (payload.size() < count) {
      throw PgmParseError("truncated payload: expected " +
                              std::to_string(count) + " bytes, found " +
                              std::to_string(payload.size()),
                          scan.pos() + payload.size());
    }
    for (std::size_t i = 0; i < count; ++i) {
      data.push_back(static_cast<std::uint8_t>(payload[i]));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      scan.skip_space_and_comments();
      if (scan.at_end()) {
        throw PgmParseError("truncated payload: expected " +
                                std::to_string(count) + " samples, found " +
                                std::to_string(i),
                            scan.pos());
      }
      const std::size_t sample_pos = scan.pos();
      const auto v = scan.read_uint("sample");
      if (v > 255) {
        throw PgmParseError("sample " + std::to_string(v) + " exceeds maxval",
                            sample_pos);
      }
      data.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return GrayImage(static_cast<std::size_t>(width),
                   static_cast<std::size_t>(height), std::move(data));
}

std::string encode_pgm(const GrayImage& img, PgmEncoding encoding) {
  std::string out;
  const bool ascii = encoding == PgmEncoding::kAscii;
  out += ascii ? "P2\n" : "P5\n";
  out += std::to_string(img.width()) + " " + std::to_string(img.height()) +
         "\n255\n";
  if (!ascii) {
    const auto px = img.pixels();
    out.append(reinterpret_cast<const char*>(px.data()), px.size());
    return out;
  }
  for (std::size_t r = 0; r < img.height(); ++r) {
    const auto row = img.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read error on " + path.string());
  }
  return decode_pgm(bytes);
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path,
               PgmEncoding encoding) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  const std::string bytes = encode_pgm(img, encoding);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError("write error on " + path.string());
  }
}

}  // namespace fuzzdenoise
