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

#ifndef FUZZDENOISE_NOISE_HPP_
#define FUZZDENOISE_NOISE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

struct NoiseSpec {
  double level = 0.0;  // fraction of pixels corrupted, [0, 1]
  std::uint64_t seed = 0;
  double salt_ratio = 0.5;  // probability a corrupted pixel becomes 255

  // Throws InvalidArgument naming the violated bound.
  void validate() const;
};

// Draw stream used for noise injection. std::mt19937_64 is fully specified
// by the C++ standard (10000th output of a default-constructed engine is
// 9981545732273789042), so corpora regenerate identically on every
// conforming platform. The helpers below avoid std::*_distribution, whose
// algorithms are implementation-defined.
using NoiseEngine = std::mt19937_64;

// Uniform integer in [0, bound) by rejection; bound must be > 0.
std::uint64_t uniform_below(NoiseEngine& engine, std::uint64_t bound);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(NoiseEngine& engine);

// round(level * pixel_count), half away from zero.
std::size_t corrupted_count(std::size_t pixel_count, double level);

// Overwrites exactly corrupted_count(W*H, level) distinct positions, chosen
// by a partial Fisher-Yates shuffle, with 255 (probability salt_ratio) or 0.
// For each chosen slot the position draw precedes the polarity draw.
GrayImage inject_sap(const GrayImage& img, const NoiseSpec& spec);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_NOISE_HPP_
