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

#include "fuzzdenoise/detector.hpp"

#include <algorithm>
#include <string>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {

std::string_view to_string(ThresholdMode mode) noexcept {
  return mode == ThresholdMode::kStrict ? "strict" : "relaxed";
}

ThresholdMode parse_threshold_mode(std::string_view text) {
  if (text == "strict") return ThresholdMode::kStrict;
  if (text == "relaxed") return ThresholdMode::kRelaxed;
  throw InvalidArgument("unknown threshold mode '" + std::string(text) +
                        "', expected strict or relaxed");
}

void DetectorConfig::validate() const {
  if (!(scale > 1.0)) {
    throw InvalidArgument("scale factor must be > 1, got " +
                          std::to_string(scale));
  }
  if (!(epsilon > 0.0)) {
    throw InvalidArgument("epsilon must be > 0, got " +
                          std::to_string(epsilon));
  }
}

WindowMeans compute_means(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  if (n < 3 || n % 2 == 0) {
    throw InvalidArgument("window must hold an odd number (>= 3) of pixels");
  }
  const std::size_t half = (n - 1) / 2;
  double low = 0.0;
  double high = 0.0;
  for (std::size_t r = 0; r < half; ++r) low += sorted[r];
  for (std::size_t r = half + 1; r < n; ++r) high += sorted[r];
  const double k = 2.0 / static_cast<double>(n - 1);
  return {k * low, k * high};
}

WindowSpread compute_spread(std::span<const double> pixels,
                            const WindowMeans& means, double scale) {
  const double nu = 0.5 * (means.m1 + means.m2);
  double acc = 0.0;
  for (const double p : pixels) acc += scale * std::abs(p - nu);
  return {acc / static_cast<double>(pixels.size()), nu};
}

Type2Profile membership_matrix(std::span<const double> pixels,
                               const WindowMeans& means,
                               const WindowSpread& spread) {
  if (!(spread.sigma > 0.0)) {
    throw DegenerateWindowError(
        "membership evaluation needs sigma > 0; route uniform windows through "
        "the epsilon path");
  }
  Type2Profile prof;
  prof.m1 = means.m1;
  prof.m2 = means.m2;
  prof.sigma = spread.sigma;
  prof.nu_avg = spread.nu_avg;
  const std::size_t n = pixels.size();
  prof.upper.resize(n);
  prof.lower.resize(n);
  prof.delta_mu.resize(n);

  const double m1 = means.m1;
  const double m2 = means.m2;
  const double mid = 0.5 * (m1 + m2);
  for (std::size_t r = 0; r < n; ++r) {
    const double p = pixels[r];
    const double mu1 = gaussian_membership(p, m1, spread.sigma);
    const double mu2 = gaussian_membership(p, m2, spread.sigma);
    double up;
    if (p < m1) {
      up = mu1;
    } else if (p <= m2) {
      up = std::max(mu1, mu2);
    } else {
      up = mu2;
    }
    const double lo = p <= mid ? mu2 : mu1;
    if (!std::isfinite(up) || !std::isfinite(lo)) {
      throw DegenerateWindowError("non-finite membership value; sigma = " +
                                  std::to_string(spread.sigma));
    }
    prof.upper[r] = up;
    prof.lower[r] = lo;
    prof.delta_mu[r] = 0.5 * (up + lo);
  }
  return prof;
}

Thresholds compute_thresholds(const Type2Profile& profile, ThresholdMode mode) {
  Thresholds t;
  // min(upper, lower) per column is always lower, but take it literally.
  for (std::size_t r = 0; r < profile.upper.size(); ++r) {
    t.t_low = std::max(t.t_low, std::min(profile.upper[r], profile.lower[r]));
  }
  if (mode == ThresholdMode::kStrict) {
    for (std::size_t r = 0; r < profile.upper.size(); ++r) {
      t.t_high = std::max({t.t_high, profile.upper[r], profile.lower[r]});
    }
  } else {
    for (const double d : profile.delta_mu) t.t_high = std::max(t.t_high, d);
  }
  return t;
}

std::vector<PixelLabel> classify(const Type2Profile& profile) {
  std::vector<PixelLabel> labels(profile.delta_mu.size());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    labels[r] = profile.delta_mu[r] >= profile.t_high ? PixelLabel::kGood
                                                      : PixelLabel::kNoisy;
  }
  return labels;
}

Type2Profile detect(const Window& win, const DetectorConfig& cfg) {
  const WindowMeans means = compute_means(win.sorted);
  const WindowSpread spread = compute_spread(win.pixels, means, cfg.scale);
  if (spread.sigma <= cfg.epsilon) {
    throw DegenerateWindowError("window spread " +
                                std::to_string(spread.sigma) +
                                " is at or below epsilon");
  }
  Type2Profile prof = membership_matrix(win.pixels, means, spread);
  const Thresholds t = compute_thresholds(prof, cfg.mode);
  prof.t_high = t.t_high;
  prof.t_low = t.t_low;
  return prof;
}

}  // namespace fuzzdenoise
