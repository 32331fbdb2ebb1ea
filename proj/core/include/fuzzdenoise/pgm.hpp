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

// PGM (P2 plain / P5 raw) codec restricted to maxval 255.
//
// Header tokens may be separated by any whitespace and '#' comments running
// to end of line. A P5 payload starts after exactly one whitespace byte
// following maxval.

#ifndef FUZZDENOISE_PGM_HPP_
#define FUZZDENOISE_PGM_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

enum class PgmEncoding { kBinary, kAscii };

// Throws PgmParseError with the failing byte offset.
GrayImage decode_pgm(std::string_view bytes);

std::string encode_pgm(const GrayImage& img,
                       PgmEncoding encoding = PgmEncoding::kBinary);

// File wrappers. IoError when the file cannot be opened or written.
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path,
               PgmEncoding encoding = PgmEncoding::kBinary);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_PGM_HPP_
