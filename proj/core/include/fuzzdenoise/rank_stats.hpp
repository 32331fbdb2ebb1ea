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

// Nonparametric comparison of l methods over M datasets: per-dataset ranks,
// the Friedman statistic with its F transform, and the Bonferroni-Dunn
// critical difference for comparing every method against the best one.

#ifndef FUZZDENOISE_RANK_STATS_HPP_
#define FUZZDENOISE_RANK_STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzdenoise {

struct RankTable {
  std::vector<std::string> methods;   // l column labels
  std::vector<std::string> datasets;  // M row labels
  std::vector<std::vector<double>> ranks;  // M x l, 1 = best, midranks on ties
  std::vector<double> avg_rank;            // column means

  std::size_t num_methods() const noexcept { return avg_rank.size(); }
  std::size_t num_datasets() const noexcept { return ranks.size(); }
};

// Labels may be empty; otherwise their sizes must match the score matrix.
// Throws InvalidArgument for M < 2, l < 2, ragged rows, or non-finite scores.
RankTable rank_rows(const std::vector<std::vector<double>>& scores,
                    bool higher_is_better,
                    std::vector<std::string> methods = {},
                    std::vector<std::string> datasets = {});

// chi^2 = 12M / (l(l+1)) * [sum R_z^2 - l(l+1)^2 / 4]
double friedman_chi_square(std::span<const double> avg_rank,
                           std::size_t num_datasets);

// F_F = (M-1) chi^2 / (M(l-1) - chi^2). Throws StatsError when the
// denominator is zero (every dataset ranks the methods identically).
double friedman_f(double chi2, std::size_t num_datasets,
                  std::size_t num_methods);

struct FriedmanOptions {
  // When set, chi^2 is rounded to this many decimals before it enters F_F,
  // as when the statistic is carried forward from a printed table.
  std::optional<int> chi2_decimals;
};

struct FriedmanReport {
  double chi2 = 0.0;
  double f_f = 0.0;
  std::size_t dof1 = 0;  // l - 1
  std::size_t dof2 = 0;  // (l - 1)(M - 1)
};

FriedmanReport friedman(std::span<const double> avg_rank,
                        std::size_t num_datasets, FriedmanOptions opts = {});
FriedmanReport friedman(const RankTable& table, FriedmanOptions opts = {});

// CD = q_alpha * sqrt(l(l+1) / (6 n))
double bd_critical_difference(std::size_t num_methods,
                              std::size_t num_datasets, double q_alpha);

// Two-tailed Bonferroni-Dunn critical values for alpha in {0.05, 0.10} and
// l in [2, 10]. Throws InvalidArgument outside the table.
double bd_q_alpha(double alpha, std::size_t num_methods);

struct Verdict {
  std::string method;
  double avg_rank = 0.0;
  double rank_gap = 0.0;  // avg_rank - best avg_rank
  bool different = false;  // rank_gap >= cd
};

struct SignificanceReport {
  double q_alpha = 0.0;
  double cd = 0.0;
  std::size_t best = 0;  // column with the lowest average rank
  std::vector<Verdict> verdicts;  // one per method, table order
};

SignificanceReport significance_report(const RankTable& table, double q_alpha);
// Same, from published average ranks when the per-dataset rows are not at
// hand.
SignificanceReport significance_report(std::span<const double> avg_rank,
                                       std::size_t num_datasets, double q_alpha,
                                       std::span<const std::string> methods = {});

}  // namespace fuzzdenoise

#endif  // FUZZDENOISE_RANK_STATS_HPP_
