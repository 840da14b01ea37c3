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

#include "sdshuffle/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace sdshuffle {
namespace {

std::vector<std::string> default_names(Eigen::Index cols) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(cols));
  for (Eigen::Index j = 0; j < cols; ++j) {
    names.push_back("X" + std::to_string(j + 1));
  }
  return names;
}

}  // namespace

DataMatrix::DataMatrix(Eigen::MatrixXd values, std::vector<std::string> column_names)
    : values_(std::move(values)), names_(std::move(column_names)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw InvalidInput("data matrix needs at least one row and one column");
  }
  if (names_.size() != static_cast<std::size_t>(values_.cols())) {
    throw InvalidInput("expected " + std::to_string(values_.cols()) +
                       " column names, got " + std::to_string(names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw InvalidInput("duplicate column name '" + name + "'");
    }
  }
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
      if (!std::isfinite(values_(i, j))) {
        throw InvalidInput("non-finite value at row " + std::to_string(i + 1) +
                           ", column '" + names_[static_cast<std::size_t>(j)] + "'");
      }
    }
  }
}

DataMatrix::DataMatrix(Eigen::MatrixXd values)
    : DataMatrix(values, default_names(values.cols())) {}

DataMatrix DataMatrix::with_values(Eigen::MatrixXd values) const {
  return DataMatrix(std::move(values), names_);
}

DataMatrix DataMatrix::select_rows(std::span<const std::size_t> order) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(order.size()), values_.cols());
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      out(static_cast<Eigen::Index>(k), j) = values_(static_cast<Eigen::Index>(order[k]), j);
    }
  }
  return DataMatrix(std::move(out), names_);
}

bool operator==(const DataMatrix& a, const DataMatrix& b) {
  return a.names_ == b.names_ && a.values_.rows() == b.values_.rows() &&
         a.values_.cols() == b.values_.cols() && a.values_ == b.values_;
}

void require_same_shape(const DataMatrix& a, const DataMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("shape mismatch: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                       "x" + std::to_string(b.cols()));
  }
}

CategoricalMatrix::CategoricalMatrix(std::size_t rows, std::size_t cols, int n_classes)
    : rows_(rows), cols_(cols), n_classes_(n_classes), labels_(rows * cols, 1) {
  if (n_classes < 1) {
    throw InvalidParameter("number of classes must be >= 1, got " +
                           std::to_string(n_classes));
  }
}

void categorize_column(std::span<const double> values, int n_classes,
                       std::span<std::int32_t> labels) {
  if (n_classes < 1) {
    throw InvalidParameter("number of classes must be >= 1, got " +
                           std::to_string(n_classes));
  }
  if (values.empty()) return;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) {
    std::fill(labels.begin(), labels.end(), 1);
    return;
  }
  const double width = (hi - lo) / n_classes;
  const double top = static_cast<double>(n_classes);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double bin = std::floor((values[i] - lo) / width) + 1.0;
    labels[i] = static_cast<std::int32_t>(std::clamp(bin, 1.0, top));
  }
}

CategoricalMatrix categorize_data(const Eigen::MatrixXd& values, int n_classes) {
  CategoricalMatrix cats(static_cast<std::size_t>(values.rows()),
                         static_cast<std::size_t>(values.cols()), n_classes);
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    categorize_column({values.col(j).data(), static_cast<std::size_t>(values.rows())},
                      n_classes, cats.column(static_cast<std::size_t>(j)));
  }
  return cats;
}

CategoricalMatrix categorize_data(const DataMatrix& data, int n_classes) {
  return categorize_data(data.values(), n_classes);
}

std::vector<std::int64_t> rank_column(std::span<const double> values, Rng& rng) {
  // Shuffle first, then stable-sort by value: tied entries end up in a
  // uniformly random relative order.
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle_in_place(std::span<std::size_t>(order), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::int64_t> ranks(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    ranks[order[k]] = static_cast<std::int64_t>(k + 1);
  }
  return ranks;
}

std::vector<std::int64_t> rank_column(std::span<const double> values, Seed seed) {
  Rng rng(seed);
  return rank_column(values, rng);
}

RankMatrix rank_columns(const DataMatrix& data, Seed seed) {
  RankMatrix ranks(data.rows(), data.cols());
  for (std::size_t j = 0; j < data.cols(); ++j) {
    Rng rng = Rng::stream(seed, {j});
    const auto column_ranks = rank_column(data.column(j), rng);
    std::copy(column_ranks.begin(), column_ranks.end(), ranks.column(j).begin());
  }
  return ranks;
}

}  // namespace sdshuffle
