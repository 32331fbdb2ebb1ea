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

#include "fuzzdenoise/noise.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {

void NoiseSpec::validate() const {
  if (!(level >= 0.0 && level <= 1.0)) {
    throw InvalidArgument("noise level " + std::to_string(level) +
                          " is outside [0, 1]");
  }
  if (!(salt_ratio >= 0.0 && salt_ratio <= 1.0)) {
    throw InvalidArgument("salt ratio " + std::to_string(salt_ratio) +
                          " is outside [0, 1]");
  }
}

std::uint64_t uniform_below(NoiseEngine& engine, std::uint64_t bound) {
  // Reject the low (2^64 mod bound) values so the modulo is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x >= threshold) return x % bound;
  }
}

double uniform_unit(NoiseEngine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::size_t corrupted_count(std::size_t pixel_count, double level) {
  const double exact = level * static_cast<double>(pixel_count);
  const auto n = static_cast<std::size_t>(std::llround(exact));
  return n > pixel_count ? pixel_count : n;
}

GrayImage inject_sap(const GrayImage& img, const NoiseSpec& spec) {
  spec.validate();
  GrayImage out = img;
  const std::size_t total = img.size();
  const std::size_t k = corrupted_count(total, spec.level);
  if (k == 0) return out;

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  NoiseEngine engine(spec.seed);
  auto px = out.pixels();
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(engine, total - i));
    std::swap(order[i], order[j]);
    const bool salt = uniform_unit(engine) < spec.salt_ratio;
    px[order[i]] = salt ? 255 : 0;
  }
  return out;
}

}  // namespace fuzzdenoise
