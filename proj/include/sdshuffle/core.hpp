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

// Data model shared by every masker and metric: the numeric microdata matrix,
// its discretized (categorical) copy, and per-column ranks.

#ifndef SDSHUFFLE_CORE_HPP_
#define SDSHUFFLE_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sdshuffle/error.hpp"
#include "sdshuffle/rng.hpp"

namespace sdshuffle {

// n x p table of finite reals with unique column names. Storage is
// column-major, so each column is a contiguous span.
class DataMatrix {
 public:
  DataMatrix(Eigen::MatrixXd values, std::vector<std::string> column_names);

  // Names the columns X1..Xp.
  explicit DataMatrix(Eigen::MatrixXd values);

  std::size_t rows() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values_.cols()); }

  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& column_names() const { return names_; }

  double operator()(std::size_t row, std::size_t col) const {
    return values_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  std::span<const double> column(std::size_t col) const {
    return {values_.col(static_cast<Eigen::Index>(col)).data(), rows()};
  }

  // Same column names, new values (validated).
  DataMatrix with_values(Eigen::MatrixXd values) const;

  // Rows reordered so that result row k is this row order[k].
  DataMatrix select_rows(std::span<const std::size_t> order) const;

  friend bool operator==(const DataMatrix& a, const DataMatrix& b);

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> names_;
};

// Throws InvalidInput unless a and b have the same n and p.
void require_same_shape(const DataMatrix& a, const DataMatrix& b);

// Integer labels 1..n_classes, column-major, one column per data column.
class CategoricalMatrix {
 public:
  CategoricalMatrix(std::size_t rows, std::size_t cols, int n_classes);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int n_classes() const { return n_classes_; }

  std::int32_t operator()(std::size_t row, std::size_t col) const {
    return labels_[col * rows_ + row];
  }
  std::span<const std::int32_t> column(std::size_t col) const {
    return {labels_.data() + col * rows_, rows_};
  }
  std::span<std::int32_t> column(std::size_t col) {
    return {labels_.data() + col * rows_, rows_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  int n_classes_;
  std::vector<std::int32_t> labels_;
};

// Equal-width binning of one column into n_classes bins over [min, max].
// The top edge is closed (the maximum gets label n_classes) and a constant
// column maps to label 1.
void categorize_column(std::span<const double> values, int n_classes,
                       std::span<std::int32_t> labels);

CategoricalMatrix categorize_data(const Eigen::MatrixXd& values, int n_classes);
CategoricalMatrix categorize_data(const DataMatrix& data, int n_classes);

// Ranks 1..n in ascending order; tied values get a uniformly random order.
std::vector<std::int64_t> rank_column(std::span<const double> values, Rng& rng);
std::vector<std::int64_t> rank_column(std::span<const double> values, Seed seed);

// Per-column ranks, each column a permutation of 1..n.
class RankMatrix {
 public:
  RankMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), ranks_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const std::int64_t> column(std::size_t col) const {
    return {ranks_.data() + col * rows_, rows_};
  }
  std::span<std::int64_t> column(std::size_t col) {
    return {ranks_.data() + col * rows_, rows_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> ranks_;
};

// Column j's ties are broken with the stream (seed, j).
RankMatrix rank_columns(const DataMatrix& data, Seed seed);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_CORE_HPP_
