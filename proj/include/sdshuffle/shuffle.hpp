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

// Joint-probability-preserving data shuffling.
//
// Each column is discretized into n_c equal-width classes. Rows are then
// permuted only among records that share the same combination of classes in
// the conditioning columns, so cross-column association survives while every
// column keeps exactly its original multiset of values.
//
//  * Full: for i = 1..p-1, the first i columns are jointly permuted within
//    each observed combination of classes of columns i+1..p.
//  * Simplified: the first p-1 columns are jointly permuted within each class
//    of the last column.
//
// Both finish with a permutation of whole rows. The sequential driver
// applies one of them p times, rotating the first column to the end between
// passes, so that every column is shuffled relative to the others.

#ifndef SDSHUFFLE_SHUFFLE_HPP_
#define SDSHUFFLE_SHUFFLE_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sdshuffle/core.hpp"
#include "sdshuffle/rng.hpp"

namespace sdshuffle {

enum class ShuffleVariant { Full, Simplified };

std::string_view to_string(ShuffleVariant variant);

// Separator used when pasting class labels into combination keys ("9.2.6").
inline constexpr char kCombinationSeparator = '.';

// Key for row `row` built from columns [first_col, cats.cols()).
std::string combination_key(const CategoricalMatrix& cats, std::size_t row,
                            std::size_t first_col);

// Rows sharing each distinct combination of columns [first_col, p), groups in
// order of first appearance, rows ascending within a group.
std::vector<std::vector<std::size_t>> group_rows_by_combination(
    const CategoricalMatrix& cats, std::size_t first_col);

// Rows sharing each distinct label of one column, in order of first
// appearance. One linear pass over the labels per distinct label.
std::vector<std::vector<std::size_t>> group_rows_by_level(
    std::span<const std::int32_t> labels);

// Without the final row permutation, for inspecting the restricted
// permutations themselves.
struct JppdsOptions {
  bool final_row_shuffle = true;
};

DataMatrix jppds_full(const DataMatrix& data, const CategoricalMatrix& cats, Rng& rng,
                      JppdsOptions options = {});
DataMatrix jppds_simplified(const DataMatrix& data, const CategoricalMatrix& cats,
                            Rng& rng, JppdsOptions options = {});

// Called after every pass of the sequential driver with the column order the
// pass was applied to (pass 0 is the original order).
using PassObserver =
    std::function<void(int pass, const std::vector<std::string>& column_order)>;

// Sequential driver. Requires n_classes >= 1 and at least two columns.
DataMatrix sjppds(const DataMatrix& data, int n_classes, ShuffleVariant variant,
                  Seed seed, const PassObserver& observer = {});

}  // namespace sdshuffle

#endif  // SDSHUFFLE_SHUFFLE_HPP_
