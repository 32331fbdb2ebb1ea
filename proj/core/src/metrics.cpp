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

#include "fuzzdenoise/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {

PsnrResult::PsnrResult(double mse) : mse_(mse) {
  if (mse > 0.0) db_ = 10.0 * std::log10(255.0 * 255.0 / mse);
}

double PsnrResult::decibels_or_inf() const noexcept {
  return db_ ? *db_ : std::numeric_limits<double>::infinity();
}

std::string PsnrResult::format_db() const {
  if (!db_) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", *db_);
  return buf;
}

double mse(const GrayImage& reference, const GrayImage& test) {
  if (reference.width() != test.width() ||
      reference.height() != test.height()) {
    throw InvalidArgument(
        "image dimensions differ: " + std::to_string(reference.width()) + "x" +
        std::to_string(reference.height()) + " vs " +
        std::to_string(test.width()) + "x" + std::to_string(test.height()));
  }
  const auto a = reference.pixels();
  const auto b = test.pixels();
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    sse += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sse) / static_cast<double>(a.size());
}

PsnrResult psnr(const GrayImage& reference, const GrayImage& test) {
  return PsnrResult(mse(reference, test));
}

}  // namespace fuzzdenoise
