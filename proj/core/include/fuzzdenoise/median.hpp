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

#ifndef FUZZDENOISE_MEDIAN_HPP_
#define FUZZDENOISE_MEDIAN_HPP_

#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

/// Standard median filter: every pixel becomes the median of its
/// (2 * radius + 1)^2 window, borders resolved with reflect_index.
/// radius must be >= 1.
GrayImage median_filter(const GrayImage& img, int radius, unsigned threads = 1);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_MEDIAN_HPP_
