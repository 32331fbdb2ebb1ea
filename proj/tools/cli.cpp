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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzdenoise/bench.hpp"
#include "fuzzdenoise/denoiser.hpp"
#include "fuzzdenoise/error.hpp"
#include "fuzzdenoise/median.hpp"
#include "fuzzdenoise/metrics.hpp"
#include "fuzzdenoise/noise.hpp"
#include "fuzzdenoise/pgm.hpp"
#include "fuzzdenoise/rank_stats.hpp"
#include "fuzzdenoise/threading.hpp"

namespace fuzzdenoise::cli {
namespace {

std::string fixed4(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

const CLI::Validator kAboveOne(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(s, v) || !(v > 1.0)) {
        return "Value " + s + " must be > 1";
      }
      return {};
    },
    "> 1");

// Options shared by every command that runs the two-stage filter.
struct FilterFlags {
  std::string mode = std::string(to_string(DetectorConfig{}.mode));
  FilterConfig cfg;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "Threshold mode")
        ->check(CLI::IsMember({"strict", "relaxed"}))
        ->capture_default_str();
    app->add_option("--scale", cfg.detector.scale, "Spread scaling factor s")
        ->check(kAboveOne)
        ->capture_default_str();
    app->add_option("--epsilon", cfg.detector.epsilon,
                    "Uniform-region cutoff on the spread")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--hmax", cfg.h_max, "Largest window half-size")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
    app->add_option("--rho-min", cfg.rho_min,
                    "Good pixels needed before growth stops")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
  }

  FilterConfig resolve() const {
    FilterConfig out = cfg;
    out.detector.mode = parse_threshold_mode(mode);
    return out;
  }
};

struct ThreadFlag {
  unsigned threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--threads", threads,
                    "Worker threads (0 = all cores; FUZZDENOISE_THREADS "
                    "overrides)")
        ->capture_default_str();
  }

  unsigned resolve() const {
    return resolve_thread_count(threads == 0 ? std::nullopt
                                             : std::optional<unsigned>(threads));
  }
};

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!CLI::detail::lexical_cast(item, v) || !(v >= 0.0 && v <= 1.0)) {
      throw CLI::ValidationError("--levels",
                                 "level '" + item + "' is not in [0, 1]");
    }
    levels.push_back(v);
  }
  if (levels.empty()) throw CLI::ValidationError("--levels", "no levels given");
  return levels;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void print_rank_table(std::ostream& out, const RankTable& table) {
  out << "dataset";
  for (const auto& m : table.methods) out << ',' << m;
  out << '\n';
  for (std::size_t d = 0; d < table.num_datasets(); ++d) {
    out << table.datasets[d];
    for (const double r : table.ranks[d]) out << ',' << fixed4(r);
    out << '\n';
  }
  out << "average";
  for (const double r : table.avg_rank) out << ',' << fixed4(r);
  out << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Salt-and-pepper denoising with an adaptive two-stage fuzzy filter",
               "fuzzdenoise"};
  app.require_subcommand(1);
  std::function<int()> action;

  // add-noise
  auto* add_noise = app.add_subcommand("add-noise", "Inject salt-and-pepper noise");
  std::string an_in, an_out;
  NoiseSpec spec;
  bool an_ascii = false;
  add_noise->add_option("--in", an_in, "Clean PGM")->required();
  add_noise->add_option("--out", an_out, "Noisy PGM to write")->required();
  add_noise->add_option("--level", spec.level, "Fraction of pixels corrupted")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  add_noise->add_option("--seed", spec.seed, "Generator seed")->required();
  add_noise->add_option("--salt-ratio", spec.salt_ratio,
                        "Probability a corrupted pixel becomes 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_noise->add_flag("--ascii", an_ascii, "Write plain (P2) PGM");
  add_noise->callback([&] {
    action = [&] {
      const GrayImage clean = read_pgm(an_in);
      const GrayImage noisy = inject_sap(clean, spec);
      write_pgm(noisy, an_out, an_ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary);
      std::size_t changed = 0;
      for (std::size_t i = 0; i < clean.size(); ++i) {
        changed += clean.pixels()[i] != noisy.pixels()[i];
      }
      out << "corrupted=" << corrupted_count(clean.size(), spec.level)
          << " changed=" << changed << '\n';
      return kExitOk;
    };
  });

  // denoise
  auto* denoise = app.add_subcommand("denoise", "Run the two-stage fuzzy filter");
  std::string dn_in, dn_out;
  bool dn_ascii = false;
  bool dn_stats = false;
  FilterFlags dn_filter;
  ThreadFlag dn_threads;
  denoise->add_option("--in", dn_in, "Noisy PGM")->required();
  denoise->add_option("--out", dn_out, "Filtered PGM to write")->required();
  dn_filter.attach(denoise);
  dn_threads.attach(denoise);
  denoise->add_flag("--ascii", dn_ascii, "Write plain (P2) PGM");
  denoise->add_flag("--stats", dn_stats, "Print per-path pixel counts");
  denoise->callback([&] {
    action = [&] {
      const GrayImage noisy = read_pgm(dn_in);
      DenoiseStats stats;
      const GrayImage restored =
          denoise_image(noisy, dn_filter.resolve(), dn_threads.resolve(), &stats);
      write_pgm(restored, dn_out, dn_ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary);
      if (dn_stats) {
        for (std::size_t p = 0; p < kDenoisePathCount; ++p) {
          out << to_string(static_cast<DenoisePath>(p)) << '='
              << stats.path_counts[p] << '\n';
        }
        out << "max_half_size=" << stats.max_half_size << '\n';
      }
      return kExitOk;
    };
  });

  // median
  auto* median = app.add_subcommand("median", "Standard median filter baseline");
  std::string md_in, md_out;
  int md_radius = 1;
  bool md_ascii = false;
  ThreadFlag md_threads;
  median->add_option("--in", md_in, "Input PGM")->required();
  median->add_option("--out", md_out, "Filtered PGM to write")->required();
  median->add_option("--radius", md_radius, "Window radius")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  md_threads.attach(median);
  median->add_flag("--ascii", md_ascii, "Write plain (P2) PGM");
  median->callback([&] {
    action = [&] {
      const GrayImage img = read_pgm(md_in);
      write_pgm(median_filter(img, md_radius, md_threads.resolve()), md_out,
                md_ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary);
      return kExitOk;
    };
  });

  // psnr
  auto* psnr_cmd = app.add_subcommand("psnr", "MSE and PSNR between two images");
  std::string ps_ref, ps_test;
  psnr_cmd->add_option("--ref", ps_ref, "Reference PGM")->required();
  psnr_cmd->add_option("--test", ps_test, "Test PGM")->required();
  psnr_cmd->callback([&] {
    action = [&] {
      const PsnrResult r = psnr(read_pgm(ps_ref), read_pgm(ps_test));
      out << "mse=" << fixed4(r.mse()) << '\n';
      out << "psnr_db=" << r.format_db() << '\n';
      return kExitOk;
    };
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Noise/denoise/score sweep to CSV");
  std::string bn_images, bn_levels = "0.2,0.5,0.8", bn_methods = "proposed,median",
                         bn_out;
  BenchConfig bn_cfg;
  FilterFlags bn_filter;
  ThreadFlag bn_threads;
  bench->add_option("--images", bn_images, "Directory of clean *.pgm images")
      ->required();
  bench->add_option("--levels", bn_levels, "Comma-separated noise levels")
      ->capture_default_str();
  bench->add_option("--trials", bn_cfg.trials, "Independent trials per cell")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  bench->add_option("--methods", bn_methods,
                    "Comma-separated methods (proposed, median, noisy)")
      ->capture_default_str();
  bench->add_option("--seed", bn_cfg.base_seed, "Base seed")->capture_default_str();
  bench->add_option("--salt-ratio", bn_cfg.salt_ratio,
                    "Probability a corrupted pixel becomes 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench->add_option("--median-radius", bn_cfg.median_radius, "Median window radius")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  bench->add_option("--out", bn_out, "CSV file to write")->required();
  bn_filter.attach(bench);
  bn_threads.attach(bench);
  bench->callback([&] {
    bn_cfg.levels = parse_levels(bn_levels);
    bn_cfg.methods = split_list(bn_methods);
    if (bn_cfg.methods.empty()) {
      throw CLI::ValidationError("--methods", "method list is empty");
    }
    for (const auto& m : bn_cfg.methods) {
      const auto& known = known_methods();
      if (std::find(known.begin(), known.end(), m) == known.end()) {
        throw CLI::ValidationError("--methods", "unknown method '" + m + "'");
      }
    }
    action = [&] {
      bn_cfg.filter = bn_filter.resolve();
      bn_cfg.threads = bn_threads.resolve();
      const auto paths = list_pgm_files(bn_images);
      const auto records = run_bench(paths, bn_cfg, [&](const std::string& msg) {
        err << "warning: " << msg << '\n';
      });
      std::ofstream csv(bn_out, std::ios::trunc);
      if (!csv) throw IoError("cannot open " + bn_out + " for writing");
      write_csv(csv, records);
      csv.flush();
      if (!csv) throw IoError("write error on " + bn_out);
      out << "image,level,method,trials,mean_psnr_db,mean_seconds\n";
      for (const auto& c : summarize(records)) {
        out << c.image << ',' << fixed4(c.level) << ',' << c.method << ','
            << c.trials << ',' << fixed4(c.mean_psnr_db) << ','
            << fixed4(c.mean_seconds) << '\n';
      }
      return kExitOk;
    };
  });

  // ranktest
  auto* ranktest = app.add_subcommand(
      "ranktest", "Friedman test and Bonferroni-Dunn critical difference");
  std::string rt_csv, rt_metric = "psnr";
  double rt_alpha = 0.1;
  double rt_q = 0.0;
  ranktest->add_option("--csv", rt_csv, "Bench CSV")->required();
  ranktest->add_option("--alpha", rt_alpha, "Significance level (0.05 or 0.1)")
      ->check(CLI::IsMember({0.05, 0.1}))
      ->capture_default_str();
  ranktest->add_option("--metric", rt_metric, "Score column")
      ->check(CLI::IsMember({"psnr", "seconds"}))
      ->capture_default_str();
  ranktest->add_option("--q", rt_q,
                       "Critical value q_alpha (overrides the built-in table)")
      ->check(CLI::PositiveNumber);
  ranktest->callback([&] {
    action = [&] {
      std::ifstream in(rt_csv);
      if (!in) throw IoError("cannot open " + rt_csv + " for reading");
      const ScoreMatrix sm = build_score_matrix(read_csv(in), parse_metric(rt_metric));
      const RankTable table =
          rank_rows(sm.scores, sm.higher_is_better, sm.methods, sm.datasets);
      print_rank_table(out, table);
      const double chi2 = friedman_chi_square(table.avg_rank, table.num_datasets());
      out << "M=" << table.num_datasets() << " l=" << table.num_methods() << '\n';
      out << "chi2=" << fixed4(chi2) << '\n';
      try {
        out << "f_f=" << fixed4(friedman_f(chi2, table.num_datasets(),
                                           table.num_methods()))
            << " dof=(" << table.num_methods() - 1 << ','
            << (table.num_methods() - 1) * (table.num_datasets() - 1) << ")\n";
      } catch (const StatsError&) {
        out << "f_f=undefined\n";
      }
      const double q = rt_q > 0.0 ? rt_q : bd_q_alpha(rt_alpha, table.num_methods());
      const SignificanceReport rep = significance_report(table, q);
      out << "q_alpha=" << fixed4(rep.q_alpha) << '\n';
      out << "cd=" << fixed4(rep.cd) << '\n';
      out << "best=" << rep.verdicts[rep.best].method << '\n';
      for (const auto& v : rep.verdicts) {
        if (&v == &rep.verdicts[rep.best]) continue;
        out << v.method << ": gap=" << fixed4(v.rank_gap) << ' '
            << (v.different ? "different" : "not-different") << '\n';
      }
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace fuzzdenoise::cli
