//
// Copyright 2026 The sdshuffle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Distance-based loss (MAE, MSE, brMAE, brMSE), the sorted-averaging wrapper
// and the full metric bundle.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sdshuffle/metrics.hpp"

namespace sdshuffle {
namespace {

__extension__ typedef __int128 Wide;

constexpr std::array<std::pair<MetricId, std::string_view>, 7> kMetricNames{{
    {MetricId::Dbrl, "dbrl"},
    {MetricId::Rid, "rid"},
    {MetricId::Sdid, "sdid"},
    {MetricId::Mae, "mae"},
    {MetricId::Mse, "mse"},
    {MetricId::Brmae, "brmae"},
    {MetricId::Brmse, "brmse"},
}};

// Row order that sorts column j ascending; equal values keep their order.
std::vector<std::size_t> sort_order(const DataMatrix& data, std::size_t j) {
  std::vector<std::size_t> order(data.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto col = data.column(j);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
  return order;
}

struct SortedPair {
  DataMatrix original;
  DataMatrix masked;
};

SortedPair sorted_by_column(const DataMatrix& original, const DataMatrix& masked,
                            std::size_t j) {
  const auto oo = sort_order(original, j);
  const auto om = sort_order(masked, j);
  return {original.select_rows(oo), masked.select_rows(om)};
}

// Row-aligned metrics of one pair, restricted to the ones requested.
struct RowAligned {
  bool dbrl = false, rid = false, sdid = false, distances = false, ranks = false;
};

MetricBundle row_aligned_metrics(const DataMatrix& original, const DataMatrix& masked,
                                 Seed seed, RowAligned which) {
  MetricBundle out;
  if (which.dbrl) out.dbrl = dbrl(original, masked);
  if (which.rid) out.rid = rid(original, masked);
  if (which.sdid) out.sdid = sdid(original, masked);
  if (which.distances) {
    const auto d = mae_mse(original, masked);
    out.mae = d.mae;
    out.mse = d.mse;
  }
  if (which.ranks) {
    const auto r = brmae_brmse(original, masked, seed);
    out.brmae = r.brmae;
    out.brmse = r.brmse;
  }
  return out;
}

void accumulate(MetricBundle& total, const MetricBundle& part) {
  total.dbrl += part.dbrl;
  total.rid += part.rid;
  total.sdid += part.sdid;
  total.mae += part.mae;
  total.mse += part.mse;
  total.brmae += part.brmae;
  total.brmse += part.brmse;
}

MetricBundle sorted_average(const DataMatrix& original, const DataMatrix& masked, Seed seed,
                            RowAligned which) {
  require_same_shape(original, masked);
  MetricBundle total;
  for (std::size_t j = 0; j < original.cols(); ++j) {
    const auto pair = sorted_by_column(original, masked, j);
    accumulate(total, row_aligned_metrics(pair.original, pair.masked,
                                          derive_seed(seed, {j}), which));
  }
  const auto p = static_cast<double>(original.cols());
  total.dbrl /= p;
  total.rid /= p;
  total.sdid /= p;
  total.mae /= p;
  total.mse /= p;
  total.brmae /= p;
  total.brmse /= p;
  return total;
}

}  // namespace

std::string_view to_string(MetricId id) {
  for (const auto& [metric, name] : kMetricNames) {
    if (metric == id) return name;
  }
  return "unknown";
}

MetricId parse_metric_id(std::string_view name) {
  for (const auto& [metric, label] : kMetricNames) {
    if (label == name) return metric;
  }
  throw InvalidParameter("unsupported metric for sorted averaging: " + std::string(name));
}

DistanceErrors mae_mse(const DataMatrix& original, const DataMatrix& masked) {
  require_same_shape(original, masked);
  const Eigen::ArrayXXd diff = (original.values() - masked.values()).array();
  const auto cells = static_cast<double>(diff.size());
  return {diff.abs().sum() / cells, diff.square().sum() / cells};
}

RankErrors brmae_brmse(const RankMatrix& original_ranks, const RankMatrix& masked_ranks) {
  if (original_ranks.rows() != masked_ranks.rows() ||
      original_ranks.cols() != masked_ranks.cols()) {
    throw InvalidInput("rank matrices differ in shape");
  }
  const auto n = static_cast<std::int64_t>(original_ranks.rows());
  const auto p = static_cast<std::int64_t>(original_ranks.cols());
  Wide abs_sum = 0, sq_sum = 0;
  for (std::size_t j = 0; j < original_ranks.cols(); ++j) {
    const auto a = original_ranks.column(j);
    const auto b = masked_ranks.column(j);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::int64_t d = a[i] - b[i];
      abs_sum += d < 0 ? -d : d;
      sq_sum += static_cast<Wide>(d) * d;
    }
  }
  // Largest attainable sums: a full reversal of every column.
  Wide abs_max = 0, sq_max = 0;
  for (std::int64_t k = 1; k <= n / 2; ++k) {
    const Wide gap = n - 2 * k + 1;
    abs_max += gap;
    sq_max += gap * gap;
  }
  abs_max *= 2 * p;
  sq_max *= 2 * p;
  if (abs_max == 0) return {0.0, 0.0};
  return {static_cast<double>(static_cast<long double>(abs_sum) /
                              static_cast<long double>(abs_max)),
          static_cast<double>(static_cast<long double>(sq_sum) /
                              static_cast<long double>(sq_max))};
}

RankErrors brmae_brmse(const DataMatrix& original, const DataMatrix& masked, Seed seed) {
  require_same_shape(original, masked);
  return brmae_brmse(rank_columns(original, derive_seed(seed, {0})),
                     rank_columns(masked, derive_seed(seed, {1})));
}

double averaged_sorted(MetricId metric, const DataMatrix& original, const DataMatrix& masked,
                       Seed seed) {
  RowAligned which;
  switch (metric) {
    case MetricId::Dbrl: which.dbrl = true; break;
    case MetricId::Rid: which.rid = true; break;
    case MetricId::Sdid: which.sdid = true; break;
    case MetricId::Mae:
    case MetricId::Mse: which.distances = true; break;
    case MetricId::Brmae:
    case MetricId::Brmse: which.ranks = true; break;
  }
  const auto avg = sorted_average(original, masked, seed, which);
  switch (metric) {
    case MetricId::Dbrl: return avg.dbrl;
    case MetricId::Rid: return avg.rid;
    case MetricId::Sdid: return avg.sdid;
    case MetricId::Mae: return avg.mae;
    case MetricId::Mse: return avg.mse;
    case MetricId::Brmae: return avg.brmae;
    case MetricId::Brmse: return avg.brmse;
  }
  throw InvalidParameter("unsupported metric");
}

MetricBundle evaluate_metrics(const DataMatrix& original, const DataMatrix& masked,
                              const EvaluationOptions& options, Diagnostics* diagnostics) {
  require_same_shape(original, masked);
  const RowAligned all{true, true, true, true, true};
  MetricBundle out = options.sorted
                         ? sorted_average(original, masked, options.seed, all)
                         : row_aligned_metrics(original, masked, options.seed, all);
  out.ps_scaled = propensity_score_il(original, masked, diagnostics);
  out.pil = pil(original, masked, diagnostics);
  return out;
}

}  // namespace sdshuffle
