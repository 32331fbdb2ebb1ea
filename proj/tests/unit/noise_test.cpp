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


#include "fuzzdenoise/noise.hpp"

#include <gtest/gtest.h>

#include "fuzzdenoise/error.hpp"
#include "test_util.hpp"

namespace fuzzdenoise {
namespace {

std::size_t count_changed(const GrayImage& a, const GrayImage& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a.pixels()[i] != b.pixels()[i];
  return n;
}

TEST(NoiseEngineTest, MatchesPublishedVector) {
  NoiseEngine e;  // default seed 5489
  e.discard(9999);
  EXPECT_EQ(e(), 9981545732273789042ull);
}

TEST(NoiseEngineTest, UniformBelowStaysInRange) {
  NoiseEngine e(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(e, bound), bound);
  }
}

TEST(NoiseEngineTest, UniformUnitInHalfOpenInterval) {
  NoiseEngine e(2);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform_unit(e);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(NoiseSpecTest, ValidatesBounds) {
  EXPECT_THROW((NoiseSpec{1.5, 0, 0.5}).validate(), InvalidArgument);
  EXPECT_THROW((NoiseSpec{-0.1, 0, 0.5}).validate(), InvalidArgument);
  EXPECT_THROW((NoiseSpec{0.5, 0, 1.1}).validate(), InvalidArgument);
  EXPECT_NO_THROW((NoiseSpec{1.0, 0, 0.0}).validate());
}

TEST(InjectSapTest, ZeroLevelIsIdentity) {
  const GrayImage img = testing::random_image(20, 20, 1);
  EXPECT_EQ(inject_sap(img, {0.0, 9, 0.5}), img);
}

TEST(InjectSapTest, FullLevelOnlyExtremes) {
  const GrayImage out = inject_sap(testing::random_image(30, 10, 2), {1.0, 9, 0.5});
  for (const auto v : out.pixels()) EXPECT_TRUE(is_extreme(v));
}

TEST(InjectSapTest, ExactCountAndRepeatable) {
  const GrayImage img(100, 100, 128);
  const NoiseSpec spec{0.5, 12345, 0.5};
  const GrayImage a = inject_sap(img, spec);
  EXPECT_EQ(count_changed(img, a), 5000u);
  EXPECT_EQ(inject_sap(img, spec), a);
}

TEST(InjectSapTest, SaltRatioExtremes) {
  const GrayImage img(16, 16, 100);
  const GrayImage salt = inject_sap(img, {1.0, 3, 1.0});
  const GrayImage pepper = inject_sap(img, {1.0, 3, 0.0});
  for (const auto v : salt.pixels()) EXPECT_EQ(v, 255);
  for (const auto v : pepper.pixels()) EXPECT_EQ(v, 0);
}

TEST(InjectSapTest, RoughlyBalancedPolarity) {
  const GrayImage out = inject_sap(GrayImage(200, 200, 128), {0.5, 77, 0.5});
  std::size_t salt = 0;
  for (const auto v : out.pixels()) salt += v == 255;
  EXPECT_NEAR(static_cast<double>(salt) / 20000.0, 0.5, 0.02);
}

TEST(InjectSapTest, DifferentSeedsDiffer) {
  const GrayImage img(32, 32, 128);
  EXPECT_NE(inject_sap(img, {0.3, 1, 0.5}), inject_sap(img, {0.3, 2, 0.5}));
}

TEST(InjectSapTest, CorruptedCountRounds) {
  EXPECT_EQ(corrupted_count(10, 0.25), 3u);  // 2.5 rounds away from zero
  EXPECT_EQ(corrupted_count(10, 0.24), 2u);
  EXPECT_EQ(corrupted_count(10, 1.0), 10u);
  EXPECT_EQ(corrupted_count(0, 0.5), 0u);
}

TEST(InjectSapProperty, UncorruptedBitIdenticalAndCountBounded) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const GrayImage img = testing::random_image(23, 17, seed);
    const double level = (seed % 10) / 10.0;
    const GrayImage out = inject_sap(img, {level, seed, 0.5});
    const std::size_t k = corrupted_count(img.size(), level);
    EXPECT_LE(count_changed(img, out), k);
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img.pixels()[i] != out.pixels()[i]) {
        EXPECT_TRUE(is_extreme(out.pixels()[i]));
      }
    }
    const GrayImage mid = testing::random_image(23, 17, seed, 1, 254);
    EXPECT_EQ(count_changed(mid, inject_sap(mid, {level, seed, 0.5})), k);
  }
}

}  // namespace
}  // namespace fuzzdenoise
