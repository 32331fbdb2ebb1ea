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

#ifndef FUZZDENOISE_METRICS_HPP_
#define FUZZDENOISE_METRICS_HPP_

#include <optional>
#include <string>

#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

// PSNR over 8-bit intensities with peak 255. Identical images have no finite
// PSNR; that case is carried as an explicit state instead of a number.
class PsnrResult {
 public:
  explicit PsnrResult(double mse);

  double mse() const noexcept { return mse_; }
  bool is_infinite() const noexcept { return !db_.has_value(); }
  // Finite decibels; nullopt when mse == 0.
  std::optional<double> decibels() const noexcept { return db_; }
  // Decibels with +inf standing in for the identical case, for arithmetic.
  double decibels_or_inf() const noexcept;

  // "inf" or the value with four decimals.
  std::string format_db() const;

 private:
  double mse_;
  std::optional<double> db_;
};

// Sum of squared differences is accumulated exactly in 64-bit integers.
// Throws InvalidArgument on a dimension mismatch.
double mse(const GrayImage& reference, const GrayImage& test);
PsnrResult psnr(const GrayImage& reference, const GrayImage& test);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_METRICS_HPP_
