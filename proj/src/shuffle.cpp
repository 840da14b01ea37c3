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

#include "sdshuffle/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sdshuffle {
namespace {

void require_matching(const DataMatrix& data, const CategoricalMatrix& cats) {
  if (data.rows() != cats.rows() || data.cols() != cats.cols()) {
    throw InvalidInput("categorical matrix shape does not match the data");
  }
  if (data.cols() < 2) {
    throw InvalidInput("joint shuffling needs at least two columns");
  }
}

// Within each group, rows `idx` of the leading `n_cols` columns receive the
// values currently held by a random permutation of the same rows.
void permute_within_groups(Eigen::MatrixXd& values,
                           const std::vector<std::vector<std::size_t>>& groups,
                           Eigen::Index n_cols, Rng& rng) {
  std::vector<std::size_t> source;
  std::vector<double> buffer;
  for (const auto& idx : groups) {
    if (idx.size() < 2) continue;
    source = idx;
    shuffle_in_place(std::span<std::size_t>(source), rng);
    buffer.resize(idx.size());
    for (Eigen::Index c = 0; c < n_cols; ++c) {
      auto col = values.col(c);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        buffer[k] = col(static_cast<Eigen::Index>(source[k]));
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        col(static_cast<Eigen::Index>(idx[k])) = buffer[k];
      }
    }
  }
}

Eigen::MatrixXd permute_rows(const Eigen::MatrixXd& values, Rng& rng) {
  std::vector<std::size_t> order(static_cast<std::size_t>(values.rows()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle_in_place(std::span<std::size_t>(order), rng);
  Eigen::MatrixXd out(values.rows(), values.cols());
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    const auto src = values.col(c);
    auto dst = out.col(c);
    for (std::size_t k = 0; k < order.size(); ++k) {
      dst(static_cast<Eigen::Index>(k)) = src(static_cast<Eigen::Index>(order[k]));
    }
  }
  return out;
}

Eigen::MatrixXd full_pass(Eigen::MatrixXd values, const CategoricalMatrix& cats, Rng& rng,
                          bool final_row_shuffle) {
  const auto p = static_cast<std::size_t>(values.cols());
  for (std::size_t i = 1; i < p; ++i) {
    // Groups come from the categorical columns i..p-1 (0-based), which this
    // step never moves; the leading i numeric columns are permuted jointly.
    const auto groups = group_rows_by_combination(cats, i);
    permute_within_groups(values, groups, static_cast<Eigen::Index>(i), rng);
  }
  return final_row_shuffle ? permute_rows(values, rng) : values;
}

Eigen::MatrixXd simplified_pass(Eigen::MatrixXd values, const CategoricalMatrix& cats,
                                Rng& rng, bool final_row_shuffle) {
  const std::size_t last = cats.cols() - 1;
  const auto groups = group_rows_by_level(cats.column(last));
  permute_within_groups(values, groups, static_cast<Eigen::Index>(last), rng);
  return final_row_shuffle ? permute_rows(values, rng) : values;
}

void rotate_first_to_last(Eigen::MatrixXd& values, std::vector<std::string>& names) {
  const Eigen::Index p = values.cols();
  Eigen::MatrixXd rotated(values.rows(), p);
  rotated.leftCols(p - 1) = values.rightCols(p - 1);
  rotated.col(p - 1) = values.col(0);
  values = std::move(rotated);
  std::rotate(names.begin(), names.begin() + 1, names.end());
}

}  // namespace

std::string_view to_string(ShuffleVariant variant) {
  return variant == ShuffleVariant::Full ? "full" : "simplified";
}

std::string combination_key(const CategoricalMatrix& cats, std::size_t row,
                            std::size_t first_col) {
  std::string key;
  for (std::size_t c = first_col; c < cats.cols(); ++c) {
    if (c != first_col) key.push_back(kCombinationSeparator);
    key += std::to_string(cats(row, c));
  }
  return key;
}

std::vector<std::vector<std::size_t>> group_rows_by_combination(
    const CategoricalMatrix& cats, std::size_t first_col) {
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::string, std::size_t> slot;
  slot.reserve(cats.rows());
  for (std::size_t r = 0; r < cats.rows(); ++r) {
    auto [it, inserted] = slot.try_emplace(combination_key(cats, r, first_col), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(r);
  }
  return groups;
}

std::vector<std::vector<std::size_t>> group_rows_by_level(
    std::span<const std::int32_t> labels) {
  // Unique, then one Which() scan per distinct level. Labels are 1..n_c.
  std::vector<std::int32_t> levels;
  const std::int32_t top = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  std::vector<char> seen(static_cast<std::size_t>(top) + 1, 0);
  for (std::int32_t label : labels) {
    if (label < 1) throw InvalidInput("class labels must be >= 1");
    if (!seen[static_cast<std::size_t>(label)]) {
      seen[static_cast<std::size_t>(label)] = 1;
      levels.push_back(label);
    }
  }
  std::vector<std::vector<std::size_t>> groups(levels.size());
  for (std::size_t g = 0; g < levels.size(); ++g) {
    const std::int32_t level = levels[g];
    for (std::size_t r = 0; r < labels.size(); ++r) {
      if (labels[r] == level) groups[g].push_back(r);
    }
  }
  return groups;
}

DataMatrix jppds_full(const DataMatrix& data, const CategoricalMatrix& cats, Rng& rng,
                      JppdsOptions options) {
  require_matching(data, cats);
  return data.with_values(full_pass(data.values(), cats, rng, options.final_row_shuffle));
}

DataMatrix jppds_simplified(const DataMatrix& data, const CategoricalMatrix& cats,
                            Rng& rng, JppdsOptions options) {
  require_matching(data, cats);
  return data.with_values(
      simplified_pass(data.values(), cats, rng, options.final_row_shuffle));
}

DataMatrix sjppds(const DataMatrix& data, int n_classes, ShuffleVariant variant, Seed seed,
                  const PassObserver& observer) {
  if (n_classes < 1) {
    throw InvalidParameter("number of classes must be >= 1, got " +
                           std::to_string(n_classes));
  }
  if (data.cols() < 2) {
    throw InvalidInput("sequential shuffling needs at least two columns");
  }
  Rng rng(seed);
  const auto pass = [&](Eigen::MatrixXd values) {
    const CategoricalMatrix cats = categorize_data(values, n_classes);
    return variant == ShuffleVariant::Full ? full_pass(std::move(values), cats, rng, true)
                                           : simplified_pass(std::move(values), cats, rng, true);
  };

  std::vector<std::string> names = data.column_names();
  Eigen::MatrixXd masked = pass(data.values());
  if (observer) observer(0, names);
  const auto p = static_cast<int>(data.cols());
  for (int i = 1; i < p; ++i) {
    rotate_first_to_last(masked, names);
    masked = pass(std::move(masked));
    if (observer) observer(i, names);
  }
  // p rotations in total: back to the input order.
  rotate_first_to_last(masked, names);
  return DataMatrix(std::move(masked), std::move(names));
}

}  // namespace sdshuffle
