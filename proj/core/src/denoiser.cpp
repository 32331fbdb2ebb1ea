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

#include "fuzzdenoise/denoiser.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fuzzdenoise/error.hpp"
#include "parallel.hpp"

namespace fuzzdenoise {

void FilterConfig::validate() const {
  detector.validate();
  if (h_max < 1) {
    throw InvalidArgument("h_max must be >= 1, got " + std::to_string(h_max));
  }
  if (rho_min < 1) {
    throw InvalidArgument("rho_min must be >= 1, got " +
                          std::to_string(rho_min));
  }
}

GoodPixelSet good_pixel_stats(std::span<const double> goods, double scale,
                              double epsilon) {
  if (goods.empty()) {
    throw InvalidArgument("good pixel set is empty");
  }
  GoodPixelSet gps;
  gps.pixels.assign(goods.begin(), goods.end());
  const double rho = static_cast<double>(goods.size());

  double sum = 0.0;
  for (const double g : goods) sum += g;
  gps.mean = sum / rho;

  double spread = 0.0;
  for (const double g : goods) spread += scale * std::abs(g - gps.mean);
  gps.sigma = spread / rho;

  if (gps.sigma > epsilon) {
    gps.weights.reserve(goods.size());
    for (const double g : goods) {
      gps.weights.push_back(gaussian_membership(g, gps.mean, gps.sigma));
    }
  }
  return gps;
}

double weighted_denoise(const GoodPixelSet& gps) {
  if (gps.weights.empty()) return gps.mean;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < gps.pixels.size(); ++i) {
    num += gps.weights[i] * gps.pixels[i];
    den += gps.weights[i];
  }
  return num / den;
}

std::string_view to_string(DenoisePath path) noexcept {
  switch (path) {
    case DenoisePath::kRetained:
      return "retained";
    case DenoisePath::kUniformWindow:
      return "uniform-window";
    case DenoisePath::kWeighted:
      return "weighted";
    case DenoisePath::kUniformGoods:
      return "uniform-goods";
    case DenoisePath::kFallback:
      return "fallback";
  }
  return "unknown";
}

std::size_t DenoiseStats::candidates() const noexcept {
  std::size_t total = 0;
  for (const auto c : path_counts) total += c;
  return total;
}

namespace {

double image_mean(const GrayImage& img) {
  std::uint64_t sum = 0;
  for (const auto v : img.pixels()) sum += v;
  return static_cast<double>(sum) / (255.0 * static_cast<double>(img.size()));
}

// `global_mean` is filled on first use.
double fallback_value(const GrayImage& img, std::size_t row, std::size_t col,
                      int half_size, std::optional<double>& global_mean) {
  if (half_size >= 1) {
    const Window win = extract_window(img, row, col, half_size);
    double sum = 0.0;
    std::size_t n = 0;
    for (const double p : win.pixels) {
      if (p != 0.0 && p != 1.0) {
        sum += p;
        ++n;
      }
    }
    if (n > 0) return sum / static_cast<double>(n);
  }
  if (!global_mean) global_mean = image_mean(img);
  return *global_mean;
}

PixelOutcome denoise_candidate(const GrayImage& img, std::size_t row,
                               std::size_t col, const FilterConfig& cfg,
                               std::optional<double>& global_mean,
                               std::vector<double>& goods) {
  const DetectorConfig& det = cfg.detector;
  const int cap = std::min(cfg.h_max, max_half_size(img));

  for (int h = 1; h <= cap; ++h) {
    const Window win = extract_window(img, row, col, h);
    const WindowMeans means = compute_means(win.sorted);
    const WindowSpread spread = compute_spread(win.pixels, means, det.scale);

    if (spread.sigma <= det.epsilon) {
      double sum = 0.0;
      for (const double p : win.pixels) sum += p;
      return {sum / static_cast<double>(win.size()),
              DenoisePath::kUniformWindow, h};
    }

    Type2Profile prof = membership_matrix(win.pixels, means, spread);
    const Thresholds t = compute_thresholds(prof, det.mode);
    const std::size_t center = win.center_index();
    if (prof.delta_mu[center] >= t.t_high) {
      return {win.center(), DenoisePath::kRetained, h};
    }

    goods.clear();
    for (std::size_t r = 0; r < win.size(); ++r) {
      if (r != center && prof.delta_mu[r] >= t.t_high) {
        goods.push_back(win.pixels[r]);
      }
    }
    if (goods.size() < static_cast<std::size_t>(cfg.rho_min)) continue;

    const GoodPixelSet gps = good_pixel_stats(goods, det.scale, det.epsilon);
    if (gps.weights.empty()) {
      return {gps.mean, DenoisePath::kUniformGoods, h};
    }
    return {weighted_denoise(gps), DenoisePath::kWeighted, h};
  }

  return {fallback_value(img, row, col, cap, global_mean),
          DenoisePath::kFallback, std::max(cap, 0)};
}

}  // namespace

PixelOutcome denoise_pixel(const GrayImage& img, std::size_t row,
                           std::size_t col, const FilterConfig& cfg) {
  cfg.validate();
  if (row >= img.height() || col >= img.width()) {
    throw InvalidArgument("pixel (" + std::to_string(row) + ", " +
                          std::to_string(col) + ") lies outside the image");
  }
  if (!is_extreme(img.at(row, col))) {
    throw InvalidArgument("denoise_pixel expects a 0 or 255 pixel");
  }
  std::optional<double> global_mean;
  std::vector<double> goods;
  return denoise_candidate(img, row, col, cfg, global_mean, goods);
}

GrayImage denoise_image(const GrayImage& img, const FilterConfig& cfg,
                        unsigned threads, DenoiseStats* stats) {
  cfg.validate();
  GrayImage out = img;
  const std::optional<double> global_mean_shared = image_mean(img);

  const std::size_t blocks = detail::row_block_count(img.height(), threads);
  std::vector<DenoiseStats> partial(blocks);

  detail::for_each_row_block(
      img.height(), threads,
      [&](std::size_t block, std::size_t begin, std::size_t end) {
        std::optional<double> global_mean = global_mean_shared;
        std::vector<double> goods;
        DenoiseStats& local = partial[block];
        for (std::size_t r = begin; r < end; ++r) {
          for (std::size_t c = 0; c < img.width(); ++c) {
            if (!is_extreme(img.at(r, c))) continue;
            const PixelOutcome o =
                denoise_candidate(img, r, c, cfg, global_mean, goods);
            out.at(r, c) = quantize(o.value);
            ++local.path_counts[static_cast<std::size_t>(o.path)];
            local.max_half_size = std::max(local.max_half_size, o.half_size);
          }
        }
      });

  if (stats != nullptr) {
    *stats = DenoiseStats{};
    for (const auto& p : partial) {
      for (std::size_t i = 0; i < kDenoisePathCount; ++i) {
        stats->path_counts[i] += p.path_counts[i];
      }
      stats->max_half_size = std::max(stats->max_half_size, p.max_half_size);
    }
  }
  return out;
}

}  // namespace fuzzdenoise
