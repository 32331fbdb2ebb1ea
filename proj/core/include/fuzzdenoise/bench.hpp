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

// Benchmark protocol: for every image x noise level x trial, inject seeded
// salt-and-pepper noise, run each method on the same noisy image, and record
// PSNR against the clean image plus the wall time of the method call alone.
//
// CSV interchange (one header line, then one row per record):
//
//   image,level,trial,method,psnr_db,seconds,seed
//
// level, psnr_db and seconds carry four decimals; psnr_db is "inf" for a
// perfect reconstruction. Rows are sorted by (image, level, trial, method
// position in the method list).

#ifndef FUZZDENOISE_BENCH_HPP_
#define FUZZDENOISE_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzdenoise/denoiser.hpp"
#include "fuzzdenoise/image.hpp"

namespace fuzzdenoise {

struct BenchRecord {
  std::string image;
  double level = 0.0;
  std::uint64_t trial = 0;
  std::string method;
  double psnr_db = 0.0;  // +inf when the output equals the clean image
  double seconds = 0.0;
  std::uint64_t seed = 0;
};

struct BenchConfig {
  std::vector<double> levels{0.2, 0.5, 0.8};
  std::size_t trials = 10;
  std::vector<std::string> methods{"proposed", "median"};
  std::uint64_t base_seed = 7;
  double salt_ratio = 0.5;
  FilterConfig filter;    // used by "proposed"
  int median_radius = 1;  // used by "median"
  unsigned threads = 1;   // row parallelism inside each method

  void validate() const;
};

struct NamedImage {
  std::string name;
  GrayImage image;
};

// Recognised method names: "proposed" (two-stage fuzzy filter), "median"
// (standard median) and "noisy" (identity, the unfiltered baseline).
using DenoiseMethod = std::function<GrayImage(const GrayImage&)>;
DenoiseMethod make_method(std::string_view name, const BenchConfig& cfg);
const std::vector<std::string>& known_methods();

// Per-trial seed: FNV-1a 64 over
//   base_seed (8 bytes LE) | image name bytes | 0x00 |
//   llround(level * 1e6) as int64 (8 bytes LE) | trial (8 bytes LE)
// finished with the SplitMix64 finalizer. Depends only on its own cell, so
// adding images or levels leaves existing cells untouched.
std::uint64_t trial_seed(std::uint64_t base_seed, std::string_view image,
                         double level, std::uint64_t trial);

std::vector<BenchRecord> run_bench(const std::vector<NamedImage>& images,
                                   const BenchConfig& cfg);

using WarningSink = std::function<void(const std::string&)>;

// Loads each path (image name = file stem). Unreadable or malformed files are
// reported through `warn` and skipped.
std::vector<NamedImage> load_images(const std::vector<std::filesystem::path>& paths,
                                    const WarningSink& warn);

// Sorted *.pgm files directly inside `dir`. IoError if `dir` is not a
// directory.
std::vector<std::filesystem::path> list_pgm_files(const std::filesystem::path& dir);

std::vector<BenchRecord> run_bench(const std::vector<std::filesystem::path>& paths,
                                   const BenchConfig& cfg, const WarningSink& warn);

// Arithmetic mean over trials for one (image, level, method) cell.
struct CellSummary {
  std::string image;
  double level = 0.0;
  std::string method;
  std::size_t trials = 0;
  double mean_psnr_db = 0.0;
  double mean_seconds = 0.0;
};
std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
// Throws InvalidArgument naming the offending line.
std::vector<BenchRecord> read_csv(std::istream& in);

enum class BenchMetric { kPsnr, kSeconds };
BenchMetric parse_metric(std::string_view text);

// Dataset = (image, level); cell score = mean over trials. Methods keep their
// first-appearance order. Throws InvalidArgument if any cell is missing or
// has an infinite mean (perfect reconstruction in some trial).
struct ScoreMatrix {
  std::vector<std::string> methods;
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> scores;  // datasets x methods
  bool higher_is_better = true;
};
ScoreMatrix build_score_matrix(const std::vector<BenchRecord>& records,
                               BenchMetric metric);

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_BENCH_HPP_
