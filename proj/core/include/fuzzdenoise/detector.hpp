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

// Stage one: impulse detection with an interval type-2 fuzzy set built from
// exactly two primary Gaussian membership functions per window.
//
// Given a window of N normalized pixels the detector
//   1. takes the means of the lower and upper sorted halves (m1 <= m2),
//      skipping the middle order statistic,
//   2. derives one shared spread sigma = mean(s * |p - (m1 + m2) / 2|),
//   3. envelopes the two Gaussians into an upper and a lower membership
//      function and evaluates both at every pixel,
//   4. averages the two memberships per pixel (delta_mu) and compares that
//      against an adaptive threshold t_high: delta_mu >= t_high is good.
//
// The uniform-window case (sigma <= epsilon) has no meaningful Gaussian and
// is the caller's responsibility; see denoiser.hpp.

#ifndef FUZZDENOISE_DETECTOR_HPP_
#define FUZZDENOISE_DETECTOR_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

enum class ThresholdMode {
  // t_high = max over every entry of the upper/lower membership stack.
  kStrict,
  // t_high = max over pixels of delta_mu. Always admits at least one pixel.
  kRelaxed,
};

std::string_view to_string(ThresholdMode mode) noexcept;
// Accepts "strict" / "relaxed"; throws InvalidArgument otherwise.
ThresholdMode parse_threshold_mode(std::string_view text);

struct DetectorConfig {
  double scale = 2.0;     // s > 1
  double epsilon = 1e-4;  // uniform-window cutoff on sigma, > 0
  ThresholdMode mode = ThresholdMode::kRelaxed;

  void validate() const;
};

struct WindowMeans {
  double m1 = 0.0;  // lower-half mean
  double m2 = 0.0;  // upper-half mean
};

struct WindowSpread {
  double sigma = 0.0;
  double nu_avg = 0.0;  // (m1 + m2) / 2
};

struct Type2Profile {
  double m1 = 0.0;
  double m2 = 0.0;
  double sigma = 0.0;
  double nu_avg = 0.0;
  std::vector<double> upper;
  std::vector<double> lower;
  std::vector<double> delta_mu;
  double t_high = 0.0;
  double t_low = 0.0;
};

struct Thresholds {
  double t_high = 0.0;
  double t_low = 0.0;
};

enum class PixelLabel : std::uint8_t { kGood, kNoisy };

// `sorted` must be ascending with odd length >= 3.
WindowMeans compute_means(std::span<const double> sorted);

WindowSpread compute_spread(std::span<const double> pixels,
                            const WindowMeans& means, double scale);

// exp(-0.5 * ((p - mean) / sigma)^2)
inline double gaussian_membership(double p, double mean, double sigma) {
  const double z = (p - mean) / sigma;
  return std::exp(-0.5 * z * z);
}

// Upper/lower memberships and their average for every pixel. Thresholds are
// left at zero. Throws DegenerateWindowError when sigma <= 0 or any value is
// non-finite.
Type2Profile membership_matrix(std::span<const double> pixels,
                               const WindowMeans& means,
                               const WindowSpread& spread);

Thresholds compute_thresholds(const Type2Profile& profile, ThresholdMode mode);

// label[r] = good iff delta_mu[r] >= t_high (exact comparison).
std::vector<PixelLabel> classify(const Type2Profile& profile);

// Full stage one on a window whose spread exceeds cfg.epsilon: means,
// spread, memberships and thresholds. Throws DegenerateWindowError when the
// spread is at or below epsilon.
Type2Profile detect(const Window& win, const DetectorConfig& cfg);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_DETECTOR_HPP_
