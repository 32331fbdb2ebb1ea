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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "algorithm1_oracle.hpp"
#include "fuzzdenoise/error.hpp"
#include "fuzzdenoise/metrics.hpp"
#include "fuzzdenoise/noise.hpp"
#include "test_util.hpp"

namespace fuzzdenoise {
namespace {

constexpr double kTol = 1e-12;

FilterConfig strict_config() {
  FilterConfig cfg;
  cfg.detector.mode = ThresholdMode::kStrict;
  return cfg;
}

TEST(GoodPixelStatsTest, SymmetricTriple) {
  const std::vector<double> g{0.4, 0.5, 0.6};
  const GoodPixelSet gps = good_pixel_stats(g, 2.0, 1e-4);
  EXPECT_NEAR(gps.mean, 0.5, kTol);
  EXPECT_NEAR(gps.sigma, 0.1333333333333333, kTol);
  ASSERT_EQ(gps.weights.size(), 3u);
  EXPECT_NEAR(gps.weights[0], 0.7548396019890073, kTol);
  EXPECT_NEAR(gps.weights[1], 1.0, kTol);
  EXPECT_NEAR(gps.weights[2], 0.7548396019890073, kTol);
  EXPECT_NEAR(weighted_denoise(gps), 0.5, kTol);
}

TEST(GoodPixelStatsTest, SkewedTriple) {
  const std::vector<double> g{0.2, 0.5, 0.6};
  const GoodPixelSet gps = good_pixel_stats(g, 2.0, 1e-4);
  EXPECT_NEAR(gps.mean, 0.4333333333333333, kTol);
  EXPECT_NEAR(gps.sigma, 0.3111111111111111, kTol);
  ASSERT_EQ(gps.weights.size(), 3u);
  EXPECT_NEAR(gps.weights[0], 0.7548396019890075, kTol);
  EXPECT_NEAR(gps.weights[1], 0.9773023728519782, kTol);
  EXPECT_NEAR(gps.weights[2], 0.8663252202026028, kTol);
  EXPECT_NEAR(weighted_denoise(gps), 0.44619160140134206, kTol);
}

TEST(GoodPixelStatsTest, UniformGoodsTakeEpsilonPath) {
  const std::vector<double> g{0.3, 0.3, 0.3};
  const GoodPixelSet gps = good_pixel_stats(g, 2.0, 1e-4);
  EXPECT_DOUBLE_EQ(gps.mean, 0.3);
  EXPECT_EQ(gps.sigma, 0.0);
  EXPECT_TRUE(gps.weights.empty());
  EXPECT_DOUBLE_EQ(weighted_denoise(gps), 0.3);
}

TEST(GoodPixelStatsTest, SingleGoodPixel) {
  const std::vector<double> g{0.62};
  EXPECT_EQ(weighted_denoise(good_pixel_stats(g, 2.0, 1e-4)), 0.62);
}

TEST(GoodPixelStatsTest, EmptyIsRejected) {
  EXPECT_THROW(good_pixel_stats({}, 2.0, 1e-4), InvalidArgument);
}

TEST(WeightedDenoiseProperty, ConvexAndPermutationInvariant) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> n(1, 24);
  std::uniform_int_distribution<int> v(1, 254);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> g(n(gen));
    for (auto& x : g) x = v(gen) / 255.0;
    const double p = weighted_denoise(good_pixel_stats(g, 2.0, 1e-4));
    EXPECT_GE(p, *std::min_element(g.begin(), g.end()) - kTol);
    EXPECT_LE(p, *std::max_element(g.begin(), g.end()) + kTol);
    std::vector<double> h = g;
    std::shuffle(h.begin(), h.end(), gen);
    EXPECT_NEAR(weighted_denoise(good_pixel_stats(h, 2.0, 1e-4)), p, kTol);
  }
}

TEST(DenoisePixelTest, DarkUniformRegionStaysDark) {
  const PixelOutcome o = denoise_pixel(GrayImage(3, 3, 0), 1, 1, {});
  EXPECT_EQ(o.value, 0.0);
  EXPECT_EQ(o.path, DenoisePath::kUniformWindow);
  EXPECT_EQ(o.half_size, 1);
}

TEST(DenoisePixelTest, UniformNeighboursReplaceCenter) {
  GrayImage img(3, 3, 128);
  img.at(1, 1) = 0;
  const PixelOutcome o = denoise_pixel(img, 1, 1, {});
  EXPECT_EQ(o.path, DenoisePath::kUniformGoods);
  EXPECT_DOUBLE_EQ(o.value, 128 / 255.0);
}

TEST(DenoisePixelTest, RejectsNonExtremeOrOutside) {
  GrayImage img(3, 3, 128);
  EXPECT_THROW(denoise_pixel(img, 1, 1, {}), InvalidArgument);
  img.at(0, 0) = 255;
  EXPECT_THROW(denoise_pixel(img, 5, 0, {}), InvalidArgument);
}

TEST(DenoisePixelTest, SinglePixelImageUsesGlobalMean) {
  const PixelOutcome o = denoise_pixel(GrayImage(1, 1, 255), 0, 0, {});
  EXPECT_EQ(o.path, DenoisePath::kFallback);
  EXPECT_EQ(o.value, 1.0);
}

TEST(DenoisePixelTest, StrictModeGrowsToFallback) {
  GrayImage img(3, 3, std::vector<std::uint8_t>{10, 40, 70, 100, 0, 130, 160, 190, 220});
  const PixelOutcome o = denoise_pixel(img, 1, 1, strict_config());
  EXPECT_EQ(o.path, DenoisePath::kFallback);
  EXPECT_EQ(o.half_size, 2);
  // Mean of the non-extreme pixels in the 5x5 reflected window.
  const Window w = extract_window(img, 1, 1, 2);
  double sum = 0;
  int count = 0;
  for (const double p : w.pixels) {
    if (p != 0.0 && p != 1.0) {
      sum += p;
      ++count;
    }
  }
  EXPECT_NEAR(o.value, sum / count, kTol);
}

TEST(DenoisePixelTest, RhoMinAboveGoodsForcesGrowth) {
  GrayImage img = testing::random_image(12, 12, 3, 1, 254);
  img.at(6, 6) = 255;
  FilterConfig cfg;
  cfg.rho_min = 30;  // more than a 5x5 window can offer
  const PixelOutcome o = denoise_pixel(img, 6, 6, cfg);
  EXPECT_GE(o.half_size, 3);
}

TEST(FilterConfigTest, Validation) {
  FilterConfig cfg;
  cfg.h_max = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = FilterConfig{};
  cfg.rho_min = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = FilterConfig{};
  cfg.detector.scale = 0.5;
  EXPECT_THROW(denoise_image(GrayImage(2, 2), cfg), InvalidArgument);
}

TEST(DenoiseImageTest, NoiseFreeImageUnchanged) {
  const GrayImage img = testing::random_image(20, 20, 8, 1, 254);
  DenoiseStats stats;
  EXPECT_EQ(denoise_image(img, {}, 1, &stats), img);
  EXPECT_EQ(stats.candidates(), 0u);
}

TEST(DenoiseImageTest, WhiteFieldStaysWhite) {
  const GrayImage img(16, 16, 255);
  DenoiseStats stats;
  EXPECT_EQ(denoise_image(img, {}, 1, &stats), img);
  EXPECT_EQ(stats.count(DenoisePath::kUniformWindow), 256u);
}

TEST(DenoiseImageTest, ConstantImageAtHalfNoiseImproves) {
  const GrayImage clean(64, 64, 128);
  const GrayImage noisy = inject_sap(clean, {0.5, 99, 0.5});
  const GrayImage out = denoise_image(noisy, {});
  EXPECT_GT(psnr(clean, out).decibels_or_inf(), psnr(clean, noisy).decibels_or_inf());
}

TEST(DenoiseImageProperty, NonExtremePixelsUntouched) {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const GrayImage clean = testing::random_image(32, 32, seed);
    const GrayImage noisy = inject_sap(clean, {0.1 + (seed % 8) / 10.0, seed, 0.5});
    const GrayImage out = denoise_image(noisy, {});
    for (std::size_t i = 0; i < noisy.size(); ++i) {
      if (!is_extreme(noisy.pixels()[i])) {
        ASSERT_EQ(out.pixels()[i], noisy.pixels()[i]) << "seed " << seed;
      }
    }
  }
}

void expect_oracle_match(const GrayImage& noisy, const FilterConfig& cfg) {
  oracle::FilterParams fp;
  fp.s = cfg.detector.scale;
  fp.eps = cfg.detector.epsilon;
  fp.strict = cfg.detector.mode == ThresholdMode::kStrict;
  fp.hmax = cfg.h_max;
  fp.rho_min = cfg.rho_min;
  const std::vector<std::uint8_t> raw(noisy.pixels().begin(), noisy.pixels().end());
  const auto expect = oracle::denoise(raw, static_cast<int>(noisy.width()),
                                      static_cast<int>(noisy.height()), fp);
  const GrayImage out = denoise_image(noisy, cfg);
  ASSERT_EQ(std::vector<std::uint8_t>(out.pixels().begin(), out.pixels().end()),
            expect);
}

TEST(DenoiseImageProperty, OracleBitEquivalence) {
  for (const double level : {0.2, 0.5, 0.8}) {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
      const GrayImage clean = testing::random_image(16, 16, 1000 + seed);
      const GrayImage noisy = inject_sap(clean, {level, seed, 0.5});
      expect_oracle_match(noisy, {});
      expect_oracle_match(noisy, strict_config());
      FilterConfig grow;
      grow.rho_min = 4;
      grow.h_max = 3;
      expect_oracle_match(noisy, grow);
    }
  }
}

TEST(DenoiseImageProperty, OracleOnSmoothImages) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    GrayImage clean(16, 16);
    for (std::size_t r = 0; r < 16; ++r) {
      for (std::size_t c = 0; c < 16; ++c) {
        clean.at(r, c) = static_cast<std::uint8_t>(60 + 8 * r + 3 * c);
      }
    }
    expect_oracle_match(inject_sap(clean, {0.5, seed, 0.5}), {});
  }
}

TEST(DenoiseImageProperty, ThreadCountDoesNotChangeOutput) {
  const GrayImage noisy = inject_sap(testing::random_image(48, 37, 4), {0.6, 4, 0.5});
  for (const auto& cfg : {FilterConfig{}, strict_config()}) {
    DenoiseStats s1;
    const GrayImage ref = denoise_image(noisy, cfg, 1, &s1);
    for (const unsigned t : {2u, 3u, 8u, 64u}) {
      DenoiseStats st;
      EXPECT_EQ(denoise_image(noisy, cfg, t, &st), ref);
      EXPECT_EQ(st.path_counts, s1.path_counts);
      EXPECT_EQ(st.max_half_size, s1.max_half_size);
    }
  }
}

// With rho_min = 1 the relaxed threshold always admits some pixel: the
// center if it attains the maximum, otherwise another one.
TEST(DenoiseImageProperty, RelaxedModeNeverGrowsWindow) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const GrayImage noisy =
        inject_sap(testing::random_image(24, 24, seed), {0.9, seed, 0.5});
    DenoiseStats stats;
    denoise_image(noisy, {}, 1, &stats);
    EXPECT_LE(stats.max_half_size, 1);
    EXPECT_EQ(stats.count(DenoisePath::kFallback), 0u);
  }
}

TEST(DenoiseImageTest, StrictModeReachesFallback) {
  const GrayImage noisy =
      inject_sap(testing::random_image(24, 24, 6), {0.5, 6, 0.5});
  DenoiseStats stats;
  denoise_image(noisy, strict_config(), 1, &stats);
  EXPECT_GT(stats.count(DenoisePath::kFallback), 0u);
  EXPECT_EQ(stats.max_half_size, 10);
}

TEST(DenoiseImageTest, DeterministicAcrossRuns) {
  const GrayImage noisy = inject_sap(testing::random_image(30, 30, 9), {0.5, 9, 0.5});
  EXPECT_EQ(denoise_image(noisy, {}, 4), denoise_image(noisy, {}, 4));
}

}  // namespace
}  // namespace fuzzdenoise
