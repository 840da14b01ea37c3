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

// DBRL, RID and SDID.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "sdshuffle/metrics.hpp"
#include "sdshuffle/stats.hpp"

namespace sdshuffle {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kWidthPercents = 10;

void check_width(int percent) {
  if (percent < 1 || percent > 100) {
    throw InvalidParameter("interval width must be 1..100 percent");
  }
}

// Number of masked values in column j that are <= x.
class ColumnRanker {
 public:
  explicit ColumnRanker(std::span<const double> column)
      : sorted_(column.begin(), column.end()) {
    std::sort(sorted_.begin(), sorted_.end());
  }
  std::int64_t rank_of(double x) const {
    return std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  }

 private:
  std::vector<double> sorted_;
};

// Largest rank displacement of each record over all columns.
std::vector<std::int64_t> max_rank_displacement(const DataMatrix& original,
                                                const DataMatrix& masked) {
  std::vector<std::int64_t> worst(original.rows(), 0);
  for (std::size_t j = 0; j < original.cols(); ++j) {
    const ColumnRanker ranker(masked.column(j));
    const auto xo = original.column(j);
    const auto xm = masked.column(j);
    for (std::size_t i = 0; i < original.rows(); ++i) {
      const std::int64_t d = std::llabs(ranker.rank_of(xo[i]) - ranker.rank_of(xm[i]));
      worst[i] = std::max(worst[i], d);
    }
  }
  return worst;
}

}  // namespace

double dbrl(const DataMatrix& original, const DataMatrix& masked) {
  require_same_shape(original, masked);
  const auto n = static_cast<Eigen::Index>(original.rows());
  const auto p = static_cast<Eigen::Index>(original.cols());
  RowMajor zo = original.values();
  RowMajor zm = masked.values();
  for (Eigen::Index j = 0; j < p; ++j) {
    const auto col = original.column(static_cast<std::size_t>(j));
    const double m = stats::mean(col);
    double sd = stats::stddev(col);
    if (!(sd > 0.0)) sd = 1.0;
    zo.col(j) = (zo.col(j).array() - m) / sd;
    zm.col(j) = (zm.col(j).array() - m) / sd;
  }

  const auto sq_dist = [&](Eigen::Index masked_row, Eigen::Index original_row) {
    const double* a = zm.row(masked_row).data();
    const double* b = zo.row(original_row).data();
    double d = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
    return d;
  };

  std::size_t linked = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double own = sq_dist(i, i);
    bool is_nearest = true;
    for (Eigen::Index k = 0; k < n && is_nearest; ++k) {
      if (k != i && sq_dist(i, k) < own) is_nearest = false;
    }
    if (is_nearest) ++linked;
  }
  return static_cast<double>(linked) / static_cast<double>(n);
}

double rid_at_width(const DataMatrix& original, const DataMatrix& masked, int percent) {
  require_same_shape(original, masked);
  check_width(percent);
  const auto n = static_cast<std::int64_t>(original.rows());
  const auto worst = max_rank_displacement(original, masked);
  // |rank difference| <= percent/100 * n, kept in integers.
  const auto disclosed = std::count_if(worst.begin(), worst.end(), [&](std::int64_t d) {
    return 100 * d <= percent * n;
  });
  return static_cast<double>(disclosed) / static_cast<double>(n);
}

double rid(const DataMatrix& original, const DataMatrix& masked) {
  require_same_shape(original, masked);
  const auto n = static_cast<std::int64_t>(original.rows());
  const auto worst = max_rank_displacement(original, masked);
  double total = 0.0;
  for (int percent = 1; percent <= kWidthPercents; ++percent) {
    const auto disclosed = std::count_if(worst.begin(), worst.end(), [&](std::int64_t d) {
      return 100 * d <= percent * n;
    });
    total += static_cast<double>(disclosed) / static_cast<double>(n);
  }
  return total / kWidthPercents;
}

double sdid_at_width(const DataMatrix& original, const DataMatrix& masked, int percent) {
  require_same_shape(original, masked);
  check_width(percent);
  std::vector<double> sd(original.cols());
  for (std::size_t j = 0; j < original.cols(); ++j) sd[j] = stats::stddev(original.column(j));

  std::size_t disclosed = 0;
  for (std::size_t i = 0; i < original.rows(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < original.cols() && inside; ++j) {
      inside = std::abs(original(i, j) - masked(i, j)) * 100.0 <= percent * sd[j];
    }
    if (inside) ++disclosed;
  }
  return static_cast<double>(disclosed) / static_cast<double>(original.rows());
}

double sdid(const DataMatrix& original, const DataMatrix& masked) {
  double total = 0.0;
  for (int percent = 1; percent <= kWidthPercents; ++percent) {
    total += sdid_at_width(original, masked, percent);
  }
  return total / kWidthPercents;
}

}  // namespace sdshuffle
