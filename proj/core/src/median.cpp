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

#include "fuzzdenoise/median.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fuzzdenoise/error.hpp"
#include "parallel.hpp"

namespace fuzzdenoise {

GrayImage median_filter(const GrayImage& img, int radius, unsigned threads) {
  if (radius < 1) {
    throw InvalidArgument("median radius must be >= 1");
  }
  GrayImage out(img.width(), img.height());
  const std::size_t side = 2 * static_cast<std::size_t>(radius) + 1;
  const std::size_t mid = side * side / 2;

  // Column reflection is the same for every row.
  std::vector<std::size_t> col_index(img.width() * side);
  for (std::size_t c = 0; c < img.width(); ++c) {
    for (std::size_t k = 0; k < side; ++k) {
      col_index[c * side + k] = reflect_index(
          static_cast<std::ptrdiff_t>(c) + static_cast<std::ptrdiff_t>(k) -
              radius,
          img.width());
    }
  }

  detail::for_each_row_block(
      img.height(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<std::uint8_t> buf(side * side);
        std::vector<std::size_t> rows(side);
        for (std::size_t r = begin; r < end; ++r) {
          for (std::size_t k = 0; k < side; ++k) {
            rows[k] = reflect_index(static_cast<std::ptrdiff_t>(r) +
                                        static_cast<std::ptrdiff_t>(k) - radius,
                                    img.height());
          }
          for (std::size_t c = 0; c < img.width(); ++c) {
            std::size_t i = 0;
            for (const std::size_t rr : rows) {
              const auto src = img.row(rr);
              for (std::size_t k = 0; k < side; ++k) {
                buf[i++] = src[col_index[c * side + k]];
              }
            }
            std::nth_element(buf.begin(), buf.begin() + mid, buf.end());
            out.at(r, c) = buf[mid];
          }
        }
      });
  return out;
}

}  // namespace fuzzdenoise
