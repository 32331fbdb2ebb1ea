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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "fuzzdenoise/error.hpp"
#include "fuzzdenoise/median.hpp"
#include "fuzzdenoise/metrics.hpp"
#include "fuzzdenoise/noise.hpp"
#include "fuzzdenoise/pgm.hpp"

namespace fuzzdenoise {
namespace {

constexpr std::string_view kCsvHeader =
    "image,level,trial,method,psnr_db,seconds,seed";

std::string fixed4(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void check_name(const std::string& name) {
  if (name.empty() || name.find_first_of(",\"\n\r") != std::string::npos) {
    throw InvalidArgument("image name '" + name +
                          "' is empty or contains CSV metacharacters");
  }
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a_le64(std::uint64_t h, std::uint64_t v) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  return fnv1a(h, bytes, 8);
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double parse_double(const std::string& field, std::size_t line) {
  if (field == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("line " + std::to_string(line) + ": '" + field +
                        "' is not a number");
}

std::uint64_t parse_u64(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    if (!field.empty() && field[0] != '-') {
      const auto v = std::stoull(field, &used);
      if (used == field.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw InvalidArgument("line " + std::to_string(line) + ": '" + field +
                        "' is not an unsigned integer");
}

}  // namespace

void BenchConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (methods.empty()) throw InvalidArgument("method list is empty");
  for (const double l : levels) {
    NoiseSpec{l, 0, salt_ratio}.validate();
  }
  filter.validate();
  if (median_radius < 1) throw InvalidArgument("median radius must be >= 1");
}

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> names{"proposed", "median", "noisy"};
  return names;
}

DenoiseMethod make_method(std::string_view name, const BenchConfig& cfg) {
  if (name == "proposed") {
    return [filter = cfg.filter, threads = cfg.threads](const GrayImage& img) {
      return denoise_image(img, filter, threads);
    };
  }
  if (name == "median") {
    return [radius = cfg.median_radius, threads = cfg.threads](const GrayImage& img) {
      return median_filter(img, radius, threads);
    };
  }
  if (name == "noisy") {
    return [](const GrayImage& img) { return img; };
  }
  throw InvalidArgument("unknown method '" + std::string(name) +
                        "' (known: proposed, median, noisy)");
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::string_view image,
                         double level, std::uint64_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a_le64(h, base_seed);
  h = fnv1a(h, image.data(), image.size());
  const unsigned char sep = 0;
  h = fnv1a(h, &sep, 1);
  h = fnv1a_le64(h, static_cast<std::uint64_t>(std::llround(level * 1e6)));
  h = fnv1a_le64(h, trial);
  return splitmix64_mix(h);
}

std::vector<BenchRecord> run_bench(const std::vector<NamedImage>& images,
                                   const BenchConfig& cfg) {
  cfg.validate();
  std::vector<DenoiseMethod> methods;
  methods.reserve(cfg.methods.size());
  for (const auto& m : cfg.methods) methods.push_back(make_method(m, cfg));

  std::vector<const NamedImage*> ordered;
  for (const auto& img : images) {
    check_name(img.name);
    ordered.push_back(&img);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const NamedImage* a, const NamedImage* b) {
                     return a->name < b->name;
                   });
  std::vector<double> levels = cfg.levels;
  std::sort(levels.begin(), levels.end());

  std::vector<BenchRecord> records;
  records.reserve(ordered.size() * levels.size() * cfg.trials * methods.size());
  for (const NamedImage* img : ordered) {
    for (const double level : levels) {
      for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t seed = trial_seed(cfg.base_seed, img->name, level, trial);
        const GrayImage noisy =
            inject_sap(img->image, NoiseSpec{level, seed, cfg.salt_ratio});
        for (std::size_t k = 0; k < methods.size(); ++k) {
          const auto t0 = std::chrono::steady_clock::now();
          const GrayImage restored = methods[k](noisy);
          const auto t1 = std::chrono::steady_clock::now();
          BenchRecord rec;
          rec.image = img->name;
          rec.level = level;
          rec.trial = trial;
          rec.method = cfg.methods[k];
          rec.psnr_db = psnr(img->image, restored).decibels_or_inf();
          rec.seconds = std::chrono::duration<double>(t1 - t0).count();
          rec.seed = seed;
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

std::vector<NamedImage> load_images(const std::vector<std::filesystem::path>& paths,
                                    const WarningSink& warn) {
  std::vector<NamedImage> images;
  for (const auto& p : paths) {
    try {
      images.push_back({p.stem().string(), read_pgm(p)});
    } catch (const Error& e) {
      if (warn) warn("skipping " + p.string() + ": " + e.what());
    }
  }
  return images;
}

std::vector<std::filesystem::path> list_pgm_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError(dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BenchRecord> run_bench(const std::vector<std::filesystem::path>& paths,
                                   const BenchConfig& cfg, const WarningSink& warn) {
  cfg.validate();
  return run_bench(load_images(paths, warn), cfg);
}

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records) {
  // Method order follows first appearance.
  std::vector<std::string> method_order;
  for (const auto& r : records) {
    if (std::find(method_order.begin(), method_order.end(), r.method) ==
        method_order.end()) {
      method_order.push_back(r.method);
    }
  }
  auto method_pos = [&](const std::string& m) {
    return std::find(method_order.begin(), method_order.end(), m) -
           method_order.begin();
  };
  using Key = std::tuple<std::string, double, std::ptrdiff_t>;
  std::map<Key, CellSummary> cells;
  for (const auto& r : records) {
    auto& c = cells[Key{r.image, r.level, method_pos(r.method)}];
    c.image = r.image;
    c.level = r.level;
    c.method = r.method;
    c.trials += 1;
    c.mean_psnr_db += r.psnr_db;
    c.mean_seconds += r.seconds;
  }
  std::vector<CellSummary> out;
  out.reserve(cells.size());
  for (auto& [key, c] : cells) {
    c.mean_psnr_db /= static_cast<double>(c.trials);
    c.mean_seconds /= static_cast<double>(c.trials);
    out.push_back(std::move(c));
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    check_name(r.image);
    out << r.image << ',' << fixed4(r.level) << ',' << r.trial << ','
        << r.method << ',' << fixed4(r.psnr_db) << ',' << fixed4(r.seconds)
        << ',' << r.seed << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) {
    throw InvalidArgument("line 1: missing CSV header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw InvalidArgument("line 1: expected header '" + std::string(kCsvHeader) +
                          "'");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 7) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": expected 7 fields, got " +
                            std::to_string(f.size()));
    }
    BenchRecord r;
    r.image = f[0];
    r.level = parse_double(f[1], lineno);
    r.trial = parse_u64(f[2], lineno);
    r.method = f[3];
    r.psnr_db = parse_double(f[4], lineno);
    r.seconds = parse_double(f[5], lineno);
    r.seed = parse_u64(f[6], lineno);
    if (r.image.empty() || r.method.empty()) {
      throw InvalidArgument("line " + std::to_string(lineno) +
                            ": image and method must be non-empty");
    }
    records.push_back(std::move(r));
  }
  return records;
}

BenchMetric parse_metric(std::string_view text) {
  if (text == "psnr") return BenchMetric::kPsnr;
  if (text == "seconds" || text == "time") return BenchMetric::kSeconds;
  throw InvalidArgument("unknown metric '" + std::string(text) +
                        "', expected psnr or seconds");
}

ScoreMatrix build_score_matrix(const std::vector<BenchRecord>& records,
                               BenchMetric metric) {
  ScoreMatrix sm;
  sm.higher_is_better = metric == BenchMetric::kPsnr;
  const auto cells = summarize(records);
  for (const auto& r : records) {
    if (std::find(sm.methods.begin(), sm.methods.end(), r.method) ==
        sm.methods.end()) {
      sm.methods.push_back(r.method);
    }
  }

  std::map<std::pair<std::string, double>, std::vector<double>> rows;
  std::map<std::pair<std::string, double>, std::vector<bool>> seen;
  for (const auto& c : cells) {
    const auto key = std::make_pair(c.image, c.level);
    auto& row = rows[key];
    auto& have = seen[key];
    row.resize(sm.methods.size(), 0.0);
    have.resize(sm.methods.size(), false);
    const auto z = static_cast<std::size_t>(
        std::find(sm.methods.begin(), sm.methods.end(), c.method) -
        sm.methods.begin());
    row[z] = metric == BenchMetric::kPsnr ? c.mean_psnr_db : c.mean_seconds;
    have[z] = true;
  }
  for (const auto& [key, row] : rows) {
    const auto& have = seen[key];
    for (std::size_t z = 0; z < have.size(); ++z) {
      if (!have[z]) {
        throw InvalidArgument("no records for method '" + sm.methods[z] +
                              "' on " + key.first + " at level " +
                              fixed4(key.second));
      }
    }
    for (std::size_t z = 0; z < row.size(); ++z) {
      if (!std::isfinite(row[z])) {
        throw InvalidArgument("method '" + sm.methods[z] + "' has an infinite mean score on " +
                              key.first + " at level " + fixed4(key.second) +
                              "; ranking needs finite scores");
      }
    }
    sm.datasets.push_back(key.first + "@" + fixed4(key.second));
    sm.scores.push_back(row);
  }
  return sm;
}

}  // namespace fuzzdenoise
