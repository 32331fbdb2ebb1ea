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

#ifndef FUZZDENOISE_THREADING_HPP_
#define FUZZDENOISE_THREADING_HPP_

#include <optional>

namespace fuzzdenoise {

// Worker count for row-parallel filters. FUZZDENOISE_THREADS, when set to a
// positive integer, wins over `requested`; otherwise `requested` or the
// hardware concurrency (at least 1).
unsigned resolve_thread_count(std::optional<unsigned> requested = std::nullopt);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_THREADING_HPP_
