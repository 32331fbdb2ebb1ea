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

#ifndef FUZZDENOISE_IMAGE_HPP_
#define FUZZDENOISE_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fuzzdenoise {

// 8-bit grayscale raster, row-major. Width and height are always >= 1.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height,
            std::vector<std::uint8_t> data);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return data_[row * width_ + col];
  }
  std::uint8_t& at(std::size_t row, std::size_t col) noexcept {
    return data_[row * width_ + col];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return data_; }
  std::span<std::uint8_t> pixels() noexcept { return data_; }

  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return std::span<const std::uint8_t>(data_).subspan(r * width_, width_);
  }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> data_;
};

// Filter-internal intensity: value / 255, so 0 and 255 map exactly to 0.0
// and 1.0.
inline double normalize(std::uint8_t value) noexcept { return value / 255.0; }

// Salt-and-pepper candidates are exactly the two extreme intensities.
inline bool is_extreme(std::uint8_t value) noexcept {
  return value == 0 || value == 255;
}

// Back to 8 bits: round half up of 255 * value, clamped to [0, 255].
std::uint8_t quantize(double normalized) noexcept;

// Symmetric reflection about the border without repeating the edge pixel:
// -1 -> 1, n -> n - 2. Folds repeatedly for indices further out; n == 1
// always maps to 0.
std::size_t reflect_index(std::ptrdiff_t index, std::size_t n) noexcept;

// Neighborhood of half-size H around (row, col): N = (2H + 1)^2 normalized
// pixels in raster order plus an ascending copy.
struct Window {
  int half_size = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::vector<double> pixels;
  std::vector<double> sorted;

  std::size_t size() const noexcept { return pixels.size(); }
  std::size_t center_index() const noexcept { return (pixels.size() - 1) / 2; }
  double center() const noexcept { return pixels[center_index()]; }
};

// Largest half-size for which single reflection stays inside the image.
int max_half_size(const GrayImage& img) noexcept;

// Throws InvalidArgument when (row, col) is outside the image, half_size < 1,
// or half_size > max_half_size(img).
Window extract_window(const GrayImage& img, std::size_t row, std::size_t col,
                      int half_size);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_IMAGE_HPP_
