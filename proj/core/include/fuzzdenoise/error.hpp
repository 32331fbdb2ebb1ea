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

#ifndef FUZZDENOISE_ERROR_HPP_
#define FUZZDENOISE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzdenoise {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a documented precondition or range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed PGM stream. offset() is the byte position where parsing stopped.
class PgmParseError : public Error {
 public:
  PgmParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Membership evaluation on a window whose spread is zero or underflows.
// Such windows belong to the uniform-region path and must not reach the
// Gaussian evaluation.
class DegenerateWindowError : public Error {
 public:
  using Error::Error;
};

// Rank statistic is undefined for the given input (for example a zero
// denominator in the F transform).
class StatsError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_ERROR_HPP_
