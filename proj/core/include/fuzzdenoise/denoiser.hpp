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

// Stage two and the per-pixel driver of the two-stage filter.
//
// Only pixels at 0 or 255 are candidates. For each one the driver grows a
// window from H = 1, runs the detector, and replaces the pixel by a
// Gaussian-weighted mean of the good pixels around it:
//
//   m       = mean(g_i)
//   sigma_G = mean(s * |g_i - m|)
//   w_i     = exp(-0.5 * ((g_i - m) / sigma_G)^2)
//   p_new   = sum(w_i g_i) / sum(w_i)
//
// All reads come from the input image, so output pixels are independent.

#ifndef FUZZDENOISE_DENOISER_HPP_
#define FUZZDENOISE_DENOISER_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzdenoise/detector.hpp"
#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

struct FilterConfig {
  DetectorConfig detector;
  int h_max = 10;   // largest half-size tried before falling back
  int rho_min = 1;  // good pixels required to stop growing

  void validate() const;
};

struct GoodPixelSet {
  std::vector<double> pixels;
  double mean = 0.0;
  double sigma = 0.0;
  // Empty when sigma <= epsilon: the Gaussian is undefined and the set is
  // represented by its mean.
  std::vector<double> weights;

  std::size_t rho() const noexcept { return pixels.size(); }
};

// Throws InvalidArgument on an empty list.
GoodPixelSet good_pixel_stats(std::span<const double> goods, double scale,
                              double epsilon);

// Weighted mean of the good pixels, or their plain mean when no weights were
// computed.
double weighted_denoise(const GoodPixelSet& gps);

enum class DenoisePath : std::size_t {
  kRetained = 0,       // center judged good by the detector
  kUniformWindow = 1,  // window spread <= epsilon, window mean
  kWeighted = 2,       // fuzzy weighted mean of good pixels
  kUniformGoods = 3,   // good-pixel spread <= epsilon, their mean
  kFallback = 4,       // growth cap reached
};
inline constexpr std::size_t kDenoisePathCount = 5;

std::string_view to_string(DenoisePath path) noexcept;

struct PixelOutcome {
  double value = 0.0;  // normalized
  DenoisePath path = DenoisePath::kRetained;
  int half_size = 0;  // window size that produced the value; 0 if none
};

// Pixel at (row, col) must be 0 or 255 (InvalidArgument otherwise).
//
// The growth cap is min(h_max, max_half_size(img)). On reaching it the value
// is the mean of non-extreme pixels in the cap window, or the mean of the
// whole image when there are none (or no window fits at all).
PixelOutcome denoise_pixel(const GrayImage& img, std::size_t row,
                           std::size_t col, const FilterConfig& cfg);

struct DenoiseStats {
  std::array<std::size_t, kDenoisePathCount> path_counts{};
  int max_half_size = 0;

  std::size_t count(DenoisePath p) const noexcept {
    return path_counts[static_cast<std::size_t>(p)];
  }
  std::size_t candidates() const noexcept;
};

// Non-extreme pixels are copied; extreme ones go through denoise_pixel and
// are re-quantized. `threads` splits the work by rows without affecting the
// result.
GrayImage denoise_image(const GrayImage& img, const FilterConfig& cfg,
                        unsigned threads = 1, DenoiseStats* stats = nullptr);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_DENOISER_HPP_
