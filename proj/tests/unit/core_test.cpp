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
#include <limits>
#include <numeric>

#include <gtest/gtest.h>

#include "test_data.hpp"

namespace sdshuffle {
namespace {

using testing::kExampleC2;
using testing::kExampleX2;

std::vector<int> labels_of(const std::vector<double>& values, int n_classes) {
  std::vector<std::int32_t> out(values.size());
  categorize_column(values, n_classes, out);
  return {out.begin(), out.end()};
}

TEST(DataMatrix, DefaultNamesAndAccess) {
  Eigen::MatrixXd x(2, 3);
  x << 1, 2, 3, 4, 5, 6;
  const DataMatrix d(x);
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(d.cols(), 3u);
  EXPECT_EQ(d.column_names(), (std::vector<std::string>{"X1", "X2", "X3"}));
  EXPECT_EQ(d(1, 2), 6.0);
  EXPECT_EQ(d.column(1)[1], 5.0);
}

TEST(DataMatrix, RejectsNonFinite) {
  Eigen::MatrixXd x(2, 1);
  x << 1, std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(DataMatrix{x}, InvalidInput);
  x(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(DataMatrix{x}, InvalidInput);
}

TEST(DataMatrix, RejectsDuplicateOrMiscountedNames) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(DataMatrix(x, {"a", "a"}), InvalidInput);
  EXPECT_THROW(DataMatrix(x, {"a"}), InvalidInput);
  EXPECT_NO_THROW(DataMatrix(x, {"a", "b"}));
}

TEST(DataMatrix, SelectRowsReorders) {
  const auto d = testing::from_rows({{1, 10}, {2, 20}, {3, 30}});
  const std::vector<std::size_t> order{2, 0, 1};
  const auto r = d.select_rows(order);
  EXPECT_EQ(r(0, 0), 3.0);
  EXPECT_EQ(r(1, 1), 10.0);
  EXPECT_EQ(r.column_names(), d.column_names());
}

TEST(Categorize, WorkedExampleSecondColumn) {
  EXPECT_EQ(labels_of(kExampleX2, 3), kExampleC2);
}

TEST(Categorize, ConstantColumnIsClassOne) {
  EXPECT_EQ(labels_of({5, 5, 5}, 4), (std::vector<int>{1, 1, 1}));
}

TEST(Categorize, EqualWidthBins) {
  EXPECT_EQ(labels_of({0, 1, 2, 3}, 2), (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(labels_of({0, 1, 2, 3}, 3), (std::vector<int>{1, 2, 3, 3}));
  EXPECT_EQ(labels_of({3, 0}, 1), (std::vector<int>{1, 1}));
}

TEST(Categorize, RejectsNonPositiveClassCount) {
  const auto d = testing::example_data();
  EXPECT_THROW(categorize_data(d, 0), InvalidParameter);
  EXPECT_THROW(categorize_data(d, -3), InvalidParameter);
}

TEST(Categorize, MonotoneAndInRangeOnRandomColumns) {
  Rng rng(Seed{11});
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(300));
    const int nc = 1 + static_cast<int>(rng.below(400));
    const double scale = std::pow(10.0, rng.uniform(-8, 8));
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = scale * rng.normal();
    const auto labels = labels_of(v, nc);
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    for (std::size_t k = 0; k < order.size(); ++k) {
      ASSERT_GE(labels[order[k]], 1);
      ASSERT_LE(labels[order[k]], nc);
      if (k > 0) ASSERT_LE(labels[order[k - 1]], labels[order[k]]);
    }
    EXPECT_EQ(labels[order.front()], 1);
    EXPECT_EQ(labels[order.back()], nc);
  }
}

TEST(RankColumn, StrictOrder) {
  EXPECT_EQ(rank_column(std::vector<double>{3.1, 1.2, 2.5}, Seed{0}),
            (std::vector<std::int64_t>{3, 1, 2}));
}

TEST(RankColumn, TiesAreRandomlyOrdered) {
  int first_low = 0;
  const int draws = 4000;
  for (int s = 0; s < draws; ++s) {
    const auto r = rank_column(std::vector<double>{7, 7}, Seed{static_cast<std::uint64_t>(s)});
    ASSERT_TRUE((r == std::vector<std::int64_t>{1, 2}) || (r == std::vector<std::int64_t>{2, 1}));
    if (r[0] == 1) ++first_low;
  }
  EXPECT_NEAR(static_cast<double>(first_low) / draws, 0.5, 0.05);
}

TEST(RankColumn, TiedPairAboveSmallerValue) {
  bool saw_23 = false, saw_32 = false;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto r = rank_column(std::vector<double>{2, 2, 1}, Seed{s});
    ASSERT_EQ(r[2], 1);
    saw_23 |= r[0] == 2 && r[1] == 3;
    saw_32 |= r[0] == 3 && r[1] == 2;
  }
  EXPECT_TRUE(saw_23 && saw_32);
}

TEST(RankColumn, SortingByRankSortsValues) {
  Rng rng(Seed{4});
  std::vector<double> v(500);
  for (auto& x : v) x = std::round(rng.normal() * 5);  // many ties
  const auto r = rank_column(v, Seed{8});
  std::vector<double> by_rank(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) by_rank[static_cast<std::size_t>(r[i] - 1)] = v[i];
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(by_rank, sorted);
}

TEST(RankColumns, EachColumnIsAPermutationAndDeterministic) {
  const auto d = testing::random_data(50, 4, 1);
  const auto a = rank_columns(d, Seed{3});
  const auto b = rank_columns(d, Seed{3});
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<std::int64_t> col(a.column(j).begin(), a.column(j).end());
    EXPECT_TRUE(std::equal(col.begin(), col.end(), b.column(j).begin()));
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < col.size(); ++i) EXPECT_EQ(col[i], static_cast<std::int64_t>(i + 1));
  }
}

}  // namespace
}  // namespace sdshuffle
