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

#include "fuzzdenoise/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("image dimensions must be at least 1x1");
  }
  data_.assign(width * height, fill);
}

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("image dimensions must be at least 1x1");
  }
  if (data_.size() != width * height) {
    throw InvalidArgument("pixel buffer holds " + std::to_string(data_.size()) +
                          " values, expected " +
                          std::to_string(width * height));
  }
}

std::uint8_t quantize(double normalized) noexcept {
  const double scaled = std::floor(255.0 * normalized + 0.5);
  if (!(scaled > 0.0)) return 0;  // also catches NaN
  if (scaled >= 255.0) return 255;
  return static_cast<std::uint8_t>(scaled);
}

std::size_t reflect_index(std::ptrdiff_t index, std::size_t n) noexcept {
  if (n == 1) return 0;
  const auto period = static_cast<std::ptrdiff_t>(2 * (n - 1));
  std::ptrdiff_t i = index % period;
  if (i < 0) i += period;
  const auto last = static_cast<std::ptrdiff_t>(n - 1);
  return static_cast<std::size_t>(i <= last ? i : period - i);
}

int max_half_size(const GrayImage& img) noexcept {
  return static_cast<int>(std::min(img.width(), img.height())) - 1;
}

Window extract_window(const GrayImage& img, std::size_t row, std::size_t col,
                      int half_size) {
  if (row >= img.height() || col >= img.width()) {
    throw InvalidArgument("window center (" + std::to_string(row) + ", " +
                          std::to_string(col) + ") lies outside the image");
  }
  if (half_size < 1) {
    throw InvalidArgument("window half-size must be >= 1");
  }
  if (half_size > max_half_size(img)) {
    throw InvalidArgument("window half-size " + std::to_string(half_size) +
                          " exceeds the reflection limit " +
                          std::to_string(max_half_size(img)) +
                          " for a " + std::to_string(img.width()) + "x" +
                          std::to_string(img.height()) + " image");
  }

  Window win;
  win.half_size = half_size;
  win.row = row;
  win.col = col;
  const std::size_t side = 2 * static_cast<std::size_t>(half_size) + 1;
  win.pixels.reserve(side * side);

  const auto r0 = static_cast<std::ptrdiff_t>(row);
  const auto c0 = static_cast<std::ptrdiff_t>(col);
  for (std::ptrdiff_t dq = -half_size; dq <= half_size; ++dq) {
    const std::size_t r = reflect_index(r0 + dq, img.height());
    const auto src = img.row(r);
    for (std::ptrdiff_t dl = -half_size; dl <= half_size; ++dl) {
      win.pixels.push_back(normalize(src[reflect_index(c0 + dl, img.width())]));
    }
  }
  win.sorted = win.pixels;
  std::sort(win.sorted.begin(), win.sorted.end());
  return win;
}

}  // namespace fuzzdenoise
