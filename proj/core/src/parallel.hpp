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

#ifndef FUZZDENOISE_SRC_PARALLEL_HPP_
#define FUZZDENOISE_SRC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace fuzzdenoise::detail {

// Calls fn(chunk, begin, end) over contiguous row blocks. Chunk boundaries
// depend only on (rows, threads), so per-chunk partial results can be merged
// in chunk order for deterministic output. The first exception thrown by any
// worker is rethrown after all workers join.
void for_each_row_block(
    std::size_t rows, unsigned threads,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Number of blocks for_each_row_block will use.
std::size_t row_block_count(std::size_t rows, unsigned threads) noexcept;

}  // namespace fuzzdenoise::detail

#endif  // FUZZDENOISE_SRC_PARALLEL_HPP_
