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

#include "parallel.hpp"

#include "fuzzdenoise/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fuzzdenoise::detail {

std::size_t row_block_count(std::size_t rows, unsigned threads) noexcept {
  if (rows == 0) return 0;
  return std::clamp<std::size_t>(threads, 1, rows);
}

void for_each_row_block(
    std::size_t rows, unsigned threads,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t blocks = row_block_count(rows, threads);
  if (blocks <= 1) {
    if (rows > 0) fn(0, 0, rows);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    workers.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t begin = rows * b / blocks;
      const std::size_t end = rows * (b + 1) / blocks;
      workers.emplace_back([&, b, begin, end] {
        try {
          fn(b, begin, end);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fuzzdenoise::detail

namespace fuzzdenoise {

unsigned resolve_thread_count(std::optional<unsigned> requested) {
  if (const char* env = std::getenv("FUZZDENOISE_THREADS")) {
    try {
      std::size_t used = 0;
      const long v = std::stol(env, &used);
      if (used == std::string(env).size() && v > 0) {
        return static_cast<unsigned>(v);
      }
    } catch (const std::exception&) {
    }
  }
  if (requested && *requested > 0) return *requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace fuzzdenoise
