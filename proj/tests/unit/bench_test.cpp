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


#include "fuzzdenoise/bench.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzdenoise/error.hpp"
#include "fuzzdenoise/metrics.hpp"
#include "fuzzdenoise/noise.hpp"
#include "fuzzdenoise/pgm.hpp"
#include "test_util.hpp"

namespace fuzzdenoise {
namespace {

// Byte-level restatement of the documented seed rule.
std::uint64_t reference_seed(std::uint64_t base, const std::string& name,
                             double level, std::uint64_t trial) {
  std::vector<unsigned char> bytes;
  auto put64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes.push_back((v >> (8 * i)) & 0xff);
  };
  put64(base);
  bytes.insert(bytes.end(), name.begin(), name.end());
  bytes.push_back(0);
  put64(static_cast<std::uint64_t>(std::llround(level * 1e6)));
  put64(trial);
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char b : bytes) h = (h ^ b) * 1099511628211ull;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

std::vector<NamedImage> one_image() {
  return {{"flat", GrayImage(24, 24, 128)}};
}

BenchConfig small_config() {
  BenchConfig cfg;
  cfg.levels = {0.2};
  cfg.trials = 2;
  return cfg;
}

TEST(TrialSeedTest, MatchesDocumentedRule) {
  for (const double level : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      EXPECT_EQ(trial_seed(7, "lena", level, t), reference_seed(7, "lena", level, t));
    }
  }
  EXPECT_NE(trial_seed(7, "a", 0.2, 0), trial_seed(7, "b", 0.2, 0));
  EXPECT_NE(trial_seed(7, "a", 0.2, 0), trial_seed(8, "a", 0.2, 0));
  EXPECT_NE(trial_seed(7, "a", 0.2, 0), trial_seed(7, "a", 0.2, 1));
}

TEST(RunBenchTest, Cardinality) {
  const auto recs = run_bench(one_image(), small_config());
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].method, "proposed");
  EXPECT_EQ(recs[1].method, "median");
  EXPECT_EQ(recs[0].trial, 0u);
  EXPECT_EQ(recs[2].trial, 1u);
  EXPECT_EQ(recs[0].seed, trial_seed(7, "flat", 0.2, 0));
  for (const auto& r : recs) EXPECT_GE(r.seconds, 0.0);
}

TEST(RunBenchTest, PsnrColumnIsReproducible) {
  BenchConfig cfg = small_config();
  cfg.levels = {0.5, 0.2};
  const auto a = run_bench(one_image(), cfg);
  cfg.threads = 3;
  const auto b = run_bench(one_image(), cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].psnr_db, b[i].psnr_db);
    EXPECT_EQ(a[i].seed, b[i].seed);
  }
  EXPECT_EQ(a.front().level, 0.2);  // levels are emitted sorted
}

TEST(RunBenchTest, AddingImagesLeavesCellsUntouched) {
  BenchConfig cfg = small_config();
  const auto alone = run_bench(one_image(), cfg);
  auto two = one_image();
  two.push_back({"another", GrayImage(24, 24, 90)});
  const auto both = run_bench(two, cfg);
  std::size_t matched = 0;
  for (const auto& r : both) {
    if (r.image != "flat") continue;
    EXPECT_EQ(r.psnr_db, alone[matched].psnr_db);
    EXPECT_EQ(r.seed, alone[matched].seed);
    ++matched;
  }
  EXPECT_EQ(matched, alone.size());
}

TEST(RunBenchTest, ProposedBeatsMedianOnFlatImage) {
  BenchConfig cfg;
  cfg.levels = {0.5};
  cfg.trials = 3;
  const auto cells = summarize(run_bench({{"flat", GrayImage(64, 64, 128)}}, cfg));
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].method, "proposed");
  EXPECT_GT(cells[0].mean_psnr_db, cells[1].mean_psnr_db);
}

TEST(RunBenchTest, ConfigValidation) {
  BenchConfig cfg = small_config();
  cfg.methods.clear();
  EXPECT_THROW(run_bench(one_image(), cfg), InvalidArgument);
  cfg = small_config();
  cfg.trials = 0;
  EXPECT_THROW(run_bench(one_image(), cfg), InvalidArgument);
  cfg = small_config();
  cfg.methods = {"wiener"};
  EXPECT_THROW(run_bench(one_image(), cfg), InvalidArgument);
  cfg = small_config();
  cfg.levels = {1.2};
  EXPECT_THROW(run_bench(one_image(), cfg), InvalidArgument);
}

TEST(RunBenchTest, NoisyMethodReportsUnfilteredPsnr) {
  BenchConfig cfg = small_config();
  cfg.methods = {"noisy"};
  const auto recs = run_bench(one_image(), cfg);
  const GrayImage clean(24, 24, 128);
  const GrayImage noisy = inject_sap(clean, {0.2, recs[0].seed, 0.5});
  EXPECT_EQ(recs[0].psnr_db, psnr(clean, noisy).decibels_or_inf());
}

TEST(LoadImagesTest, SkipsUnreadableWithWarning) {
  testing::TempDir dir;
  write_pgm(GrayImage(4, 4, 9), dir / "good.pgm");
  std::ofstream(dir / "bad.pgm") << "P9 nonsense";
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto paths = list_pgm_files(dir.path());
  ASSERT_EQ(paths.size(), 2u);
  std::vector<std::string> warnings;
  const auto records = run_bench(paths, small_config(),
                                 [&](const std::string& w) { warnings.push_back(w); });
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("bad.pgm"), std::string::npos);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].image, "good");
  EXPECT_THROW(list_pgm_files(dir / "missing"), IoError);
}

TEST(CsvTest, RoundTrip) {
  BenchRecord inf_rec{"flat", 0.0, 0, "proposed", INFINITY, 0.5, 42};
  std::vector<BenchRecord> recs = run_bench(one_image(), small_config());
  recs.push_back(inf_rec);
  std::stringstream ss;
  write_csv(ss, recs);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("image,level,trial,method,psnr_db,seconds,seed\n", 0), 0u);
  EXPECT_NE(text.find(",inf,"), std::string::npos);
  const auto back = read_csv(ss);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].image, recs[i].image);
    EXPECT_EQ(back[i].method, recs[i].method);
    EXPECT_EQ(back[i].trial, recs[i].trial);
    EXPECT_EQ(back[i].seed, recs[i].seed);
    EXPECT_NEAR(back[i].level, recs[i].level, 5e-5);
    if (std::isinf(recs[i].psnr_db)) {
      EXPECT_TRUE(std::isinf(back[i].psnr_db));
    } else {
      EXPECT_NEAR(back[i].psnr_db, recs[i].psnr_db, 5e-5);
    }
  }
}

TEST(CsvTest, ErrorsNameTheLine) {
  std::stringstream bad_header("image,level\n");
  EXPECT_THROW(read_csv(bad_header), InvalidArgument);
  std::stringstream bad_row(
      "image,level,trial,method,psnr_db,seconds,seed\n"
      "a,0.2000,0,median,30.0,0.1,5\n"
      "a,0.2000,x,median,30.0,0.1,5\n");
  try {
    read_csv(bad_row);
    FAIL() << "expected an error";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ScoreMatrixTest, DatasetsAreImageLevelPairs) {
  BenchConfig cfg = small_config();
  cfg.levels = {0.2, 0.5};
  auto imgs = one_image();
  imgs.push_back({"ramp", testing::random_image(24, 24, 2)});
  const ScoreMatrix sm = build_score_matrix(run_bench(imgs, cfg), BenchMetric::kPsnr);
  EXPECT_EQ(sm.methods, (std::vector<std::string>{"proposed", "median"}));
  EXPECT_EQ(sm.datasets, (std::vector<std::string>{"flat@0.2000", "flat@0.5000",
                                                   "ramp@0.2000", "ramp@0.5000"}));
  EXPECT_TRUE(sm.higher_is_better);
  EXPECT_FALSE(build_score_matrix(run_bench(imgs, cfg), BenchMetric::kSeconds)
                   .higher_is_better);
}

TEST(ScoreMatrixTest, MissingCellIsAnError) {
  std::vector<BenchRecord> recs{{"a", 0.2, 0, "m1", 30, 0.1, 1},
                                {"a", 0.2, 0, "m2", 31, 0.1, 1},
                                {"b", 0.2, 0, "m1", 29, 0.1, 2}};
  EXPECT_THROW(build_score_matrix(recs, BenchMetric::kPsnr), InvalidArgument);
}

TEST(ParseMetricTest, Names) {
  EXPECT_EQ(parse_metric("psnr"), BenchMetric::kPsnr);
  EXPECT_EQ(parse_metric("seconds"), BenchMetric::kSeconds);
  EXPECT_EQ(parse_metric("time"), BenchMetric::kSeconds);
  EXPECT_THROW(parse_metric("ssim"), InvalidArgument);
}

}  // namespace
}  // namespace fuzzdenoise
