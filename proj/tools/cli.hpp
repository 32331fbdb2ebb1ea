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

#ifndef FUZZDENOISE_TOOLS_CLI_HPP_
#define FUZZDENOISE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzdenoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one subcommand. `args` excludes the program name. Usage problems
// return kExitUsage with the message and usage text on `err`; I/O and data
// failures return kExitData.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace fuzzdenoise::cli

#endif  // FUZZDENOISE_TOOLS_CLI_HPP_
