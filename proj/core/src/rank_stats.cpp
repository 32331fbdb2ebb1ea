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

#include "fuzzdenoise/rank_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "fuzzdenoise/error.hpp"

namespace fuzzdenoise {
namespace {

// Critical values q_alpha = z_{1 - alpha / (2 (l - 1))}, l = 2..10.
constexpr std::array<double, 9> kQ005 = {1.960, 2.241, 2.394, 2.498, 2.576,
                                         2.638, 2.690, 2.734, 2.773};
constexpr std::array<double, 9> kQ010 = {1.645, 1.960, 2.128, 2.241, 2.326,
                                         2.394, 2.450, 2.498, 2.539};

std::vector<double> midranks(const std::vector<double>& row,
                             bool higher_is_better) {
  const std::size_t l = row.size();
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_is_better ? row[a] > row[b] : row[a] < row[b];
  });
  std::vector<double> ranks(l);
  std::size_t i = 0;
  while (i < l) {
    std::size_t j = i + 1;
    while (j < l && row[order[j]] == row[order[i]]) ++j;
    // positions i..j-1 share ranks i+1..j
    const double mid = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mid;
    i = j;
  }
  return ranks;
}

}  // namespace

RankTable rank_rows(const std::vector<std::vector<double>>& scores,
                    bool higher_is_better, std::vector<std::string> methods,
                    std::vector<std::string> datasets) {
  const std::size_t m = scores.size();
  if (m < 2) throw InvalidArgument("rank table needs at least two datasets");
  const std::size_t l = scores.front().size();
  if (l < 2) throw InvalidArgument("rank table needs at least two methods");
  for (std::size_t d = 0; d < m; ++d) {
    if (scores[d].size() != l) {
      throw InvalidArgument("score row " + std::to_string(d) + " has " +
                            std::to_string(scores[d].size()) +
                            " entries, expected " + std::to_string(l));
    }
    for (const double v : scores[d]) {
      if (!std::isfinite(v)) {
        throw InvalidArgument("score row " + std::to_string(d) +
                              " contains a non-finite value");
      }
    }
  }
  if (!methods.empty() && methods.size() != l) {
    throw InvalidArgument("method label count does not match score columns");
  }
  if (!datasets.empty() && datasets.size() != m) {
    throw InvalidArgument("dataset label count does not match score rows");
  }

  RankTable table;
  table.methods = std::move(methods);
  table.datasets = std::move(datasets);
  table.ranks.reserve(m);
  table.avg_rank.assign(l, 0.0);
  for (const auto& row : scores) {
    table.ranks.push_back(midranks(row, higher_is_better));
    for (std::size_t z = 0; z < l; ++z) table.avg_rank[z] += table.ranks.back()[z];
  }
  for (auto& r : table.avg_rank) r /= static_cast<double>(m);
  return table;
}

double friedman_chi_square(std::span<const double> avg_rank,
                           std::size_t num_datasets) {
  const auto l = static_cast<double>(avg_rank.size());
  const auto m = static_cast<double>(num_datasets);
  double sum_sq = 0.0;
  for (const double r : avg_rank) sum_sq += r * r;
  return 12.0 * m / (l * (l + 1.0)) *
         (sum_sq - l * (l + 1.0) * (l + 1.0) / 4.0);
}

double friedman_f(double chi2, std::size_t num_datasets,
                  std::size_t num_methods) {
  const auto m = static_cast<double>(num_datasets);
  const auto l = static_cast<double>(num_methods);
  const double den = m * (l - 1.0) - chi2;
  if (den == 0.0) {
    throw StatsError(
        "F_F is undefined: M(l-1) equals chi^2 (rankings agree on every "
        "dataset)");
  }
  return (m - 1.0) * chi2 / den;
}

FriedmanReport friedman(std::span<const double> avg_rank,
                        std::size_t num_datasets, FriedmanOptions opts) {
  if (avg_rank.size() < 2 || num_datasets < 2) {
    throw InvalidArgument("Friedman test needs l >= 2 and M >= 2");
  }
  FriedmanReport rep;
  rep.chi2 = friedman_chi_square(avg_rank, num_datasets);
  double chi2_for_f = rep.chi2;
  if (opts.chi2_decimals) {
    const double scale = std::pow(10.0, *opts.chi2_decimals);
    chi2_for_f = std::round(rep.chi2 * scale) / scale;
  }
  rep.f_f = friedman_f(chi2_for_f, num_datasets, avg_rank.size());
  rep.dof1 = avg_rank.size() - 1;
  rep.dof2 = (avg_rank.size() - 1) * (num_datasets - 1);
  return rep;
}

FriedmanReport friedman(const RankTable& table, FriedmanOptions opts) {
  return friedman(table.avg_rank, table.num_datasets(), opts);
}

double bd_critical_difference(std::size_t num_methods,
                              std::size_t num_datasets, double q_alpha) {
  if (num_methods < 2 || num_datasets < 1) {
    throw InvalidArgument("critical difference needs l >= 2 and n >= 1");
  }
  const auto l = static_cast<double>(num_methods);
  const auto n = static_cast<double>(num_datasets);
  return q_alpha * std::sqrt(l * (l + 1.0) / (6.0 * n));
}

double bd_q_alpha(double alpha, std::size_t num_methods) {
  if (num_methods < 2 || num_methods > 10) {
    throw InvalidArgument("no tabulated q_alpha for " +
                          std::to_string(num_methods) +
                          " methods (table covers 2..10); pass q explicitly");
  }
  const std::size_t i = num_methods - 2;
  if (std::abs(alpha - 0.05) < 1e-12) return kQ005[i];
  if (std::abs(alpha - 0.10) < 1e-12) return kQ010[i];
  throw InvalidArgument("no tabulated q_alpha for alpha = " +
                        std::to_string(alpha) + " (table covers 0.05, 0.1)");
}

SignificanceReport significance_report(std::span<const double> avg_rank,
                                       std::size_t num_datasets, double q_alpha,
                                       std::span<const std::string> methods) {
  if (avg_rank.empty()) {
    throw InvalidArgument("significance report needs at least one method");
  }
  SignificanceReport rep;
  rep.q_alpha = q_alpha;
  rep.cd = bd_critical_difference(avg_rank.size(), num_datasets, q_alpha);
  rep.best = static_cast<std::size_t>(
      std::min_element(avg_rank.begin(), avg_rank.end()) - avg_rank.begin());
  const double best = avg_rank[rep.best];
  for (std::size_t z = 0; z < avg_rank.size(); ++z) {
    Verdict v;
    v.method = z < methods.size() ? methods[z] : "method" + std::to_string(z + 1);
    v.avg_rank = avg_rank[z];
    v.rank_gap = v.avg_rank - best;
    v.different = v.rank_gap >= rep.cd;
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

SignificanceReport significance_report(const RankTable& table, double q_alpha) {
  return significance_report(table.avg_rank, table.num_datasets(), q_alpha,
                             table.methods);
}

}  // namespace fuzzdenoise
