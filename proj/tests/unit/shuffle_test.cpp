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
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "sdshuffle/stats.hpp"
#include "test_data.hpp"

namespace sdshuffle {
namespace {

using testing::kExampleC2;
using testing::kExampleX1;
using testing::random_data;
using testing::sorted_column;
using testing::example_data;

using Row = std::vector<double>;

Row row_of(const DataMatrix& d, std::size_t i, std::size_t cols) {
  Row r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = d(i, j);
  return r;
}

std::multiset<Row> rows_of(const DataMatrix& d, std::size_t cols) {
  std::multiset<Row> out;
  for (std::size_t i = 0; i < d.rows(); ++i) out.insert(row_of(d, i, cols));
  return out;
}

double spearman(const DataMatrix& d) {
  const auto r = rank_columns(d, Seed{0});
  std::vector<double> a(r.column(0).begin(), r.column(0).end());
  std::vector<double> b(r.column(1).begin(), r.column(1).end());
  return stats::correlation(a, b);
}

TEST(CombinationKey, JoinsLabelsWithSeparator) {
  CategoricalMatrix cats(1, 4, 9);
  cats.column(0)[0] = 4;
  cats.column(1)[0] = 9;
  cats.column(2)[0] = 2;
  cats.column(3)[0] = 6;
  EXPECT_EQ(combination_key(cats, 0, 1), "9.2.6");
  EXPECT_EQ(combination_key(cats, 0, 3), "6");
}

TEST(Grouping, FirstAppearanceOrder) {
  const std::vector<std::int32_t> labels{3, 1, 3, 2, 1};
  const auto groups = group_rows_by_level(labels);
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(groups[1], (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(groups[2], (std::vector<std::size_t>{3}));

  CategoricalMatrix cats(4, 3, 3);
  const std::int32_t c1[] = {1, 1, 2, 2}, c2[] = {1, 2, 1, 2}, c3[] = {3, 3, 3, 1};
  std::copy(std::begin(c1), std::end(c1), cats.column(0).begin());
  std::copy(std::begin(c2), std::end(c2), cats.column(1).begin());
  std::copy(std::begin(c3), std::end(c3), cats.column(2).begin());
  const auto combos = group_rows_by_combination(cats, 1);
  ASSERT_EQ(combos.size(), 3u);  // "1.3", "2.3", "2.1"
  EXPECT_EQ(combos[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(combos[1], (std::vector<std::size_t>{1}));
  EXPECT_EQ(combos[2], (std::vector<std::size_t>{3}));
}

// X1 values of rows in C2 class 1 stay within those rows.
void expect_example_classes_closed(const DataMatrix& out) {
  for (int level = 1; level <= 3; ++level) {
    std::multiset<double> before, after;
    for (std::size_t i = 0; i < 12; ++i) {
      if (kExampleC2[i] != level) continue;
      before.insert(kExampleX1[i]);
      after.insert(out(i, 0));
    }
    EXPECT_EQ(before, after) << "class " << level;
  }
}

TEST(Jppds, WorkedExampleKeepsClassMembership) {
  const auto data = example_data();
  const auto cats = categorize_data(data, 3);
  bool moved = false;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng r1(Seed{s}), r2(Seed{s});
    const auto full = jppds_full(data, cats, r1, {false});
    const auto simple = jppds_simplified(data, cats, r2, {false});
    expect_example_classes_closed(full);
    expect_example_classes_closed(simple);
    EXPECT_TRUE(std::equal(simple.column(1).begin(), simple.column(1).end(),
                           data.column(1).begin()));
    moved |= !(simple == data);
  }
  EXPECT_TRUE(moved);
}

TEST(Jppds, SingletonCombinationsOnlyPermuteWholeRows) {
  const auto data = random_data(60, 3, 5);
  const auto cats = categorize_data(data, 100000);  // every combination unique
  Rng r1(Seed{1}), r2(Seed{2});
  EXPECT_EQ(rows_of(jppds_full(data, cats, r1), 3), rows_of(data, 3));
  EXPECT_EQ(rows_of(jppds_simplified(data, cats, r2), 3), rows_of(data, 3));
}

TEST(Jppds, SingleClassDecouplesColumns) {
  double total = 0.0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) {
    const auto data = random_data(1000, 2, 10000 + static_cast<std::uint64_t>(s));
    const auto cats = categorize_data(data, 1);
    Rng rng(Seed{static_cast<std::uint64_t>(s)});
    total += std::abs(spearman(jppds_full(data, cats, rng)));
  }
  EXPECT_LT(total / seeds, 0.05);
}

TEST(Jppds, SimplifiedMovesIntactLeadingFragments) {
  const auto data = random_data(200, 4, 8);
  const auto cats = categorize_data(data, 5);
  Rng rng(Seed{4});
  const auto out = jppds_simplified(data, cats, rng);
  EXPECT_EQ(rows_of(out, 3), rows_of(data, 3));
}

TEST(Jppds, SimplifiedFourByThreeEnumeration) {
  const auto data = testing::from_rows({{1, 10, 0}, {2, 20, 0.1}, {3, 30, 5}, {4, 40, 5.1}});
  const auto cats = categorize_data(data, 2);
  ASSERT_EQ(cats(0, 2), 1);
  ASSERT_EQ(cats(1, 2), 1);
  ASSERT_EQ(cats(2, 2), 2);
  ASSERT_EQ(cats(3, 2), 2);
  // Each outcome is identified by which fragment sits in rows 0 and 2.
  std::map<std::pair<double, double>, int> outcomes;
  const int draws = 8000;
  for (int s = 0; s < draws; ++s) {
    Rng rng(Seed{static_cast<std::uint64_t>(s)});
    const auto out = jppds_simplified(data, cats, rng, {false});
    for (std::size_t i = 0; i < 4; ++i) {
      ASSERT_EQ(out(i, 1), 10 * out(i, 0));  // fragment intact
      ASSERT_EQ(out(i, 2), data(i, 2));      // last column fixed
    }
    ASSERT_TRUE(out(0, 0) == 1 || out(0, 0) == 2);
    ASSERT_TRUE(out(2, 0) == 3 || out(2, 0) == 4);
    ++outcomes[{out(0, 0), out(2, 0)}];
  }
  ASSERT_EQ(outcomes.size(), 4u);
  for (const auto& [key, count] : outcomes) {
    EXPECT_NEAR(static_cast<double>(count) / draws, 0.25, 0.03);
  }
}

TEST(Jppds, FullLastStepClosedWithinLastColumnClasses) {
  const auto data = random_data(300, 3, 21);
  const auto cats = categorize_data(data, 4);
  Rng rng(Seed{6});
  const auto out = jppds_full(data, cats, rng, {false});
  std::map<int, std::multiset<double>> before, after;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    EXPECT_EQ(out(i, 2), data(i, 2));
    for (std::size_t j = 0; j < 2; ++j) {
      before[cats(i, 2) * 10 + static_cast<int>(j)].insert(data(i, j));
      after[cats(i, 2) * 10 + static_cast<int>(j)].insert(out(i, j));
    }
  }
  EXPECT_EQ(before, after);
}

TEST(Jppds, ShapeMismatchAndSingleColumnRejected) {
  const auto data = random_data(10, 3, 1);
  Rng rng(Seed{0});
  EXPECT_THROW(jppds_full(data, CategoricalMatrix(10, 2, 3), rng), InvalidInput);
  EXPECT_THROW(jppds_simplified(data, CategoricalMatrix(9, 3, 3), rng), InvalidInput);
  const auto one = random_data(10, 1, 1);
  EXPECT_THROW(jppds_simplified(one, categorize_data(one, 2), rng), InvalidInput);
}

TEST(Sjppds, PreservesEveryMarginalAndNames) {
  for (auto variant : {ShuffleVariant::Full, ShuffleVariant::Simplified}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto data = random_data(150, 5, 100 + s);
      const auto out = sjppds(data, 7, variant, Seed{s});
      EXPECT_EQ(out.column_names(), data.column_names());
      for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_EQ(sorted_column(out, j), sorted_column(data, j));
      }
    }
  }
}

TEST(Sjppds, DeterministicPerSeed) {
  const auto data = random_data(100, 4, 3);
  EXPECT_EQ(sjppds(data, 10, ShuffleVariant::Full, Seed{5}),
            sjppds(data, 10, ShuffleVariant::Full, Seed{5}));
  EXPECT_FALSE(sjppds(data, 10, ShuffleVariant::Full, Seed{5}) ==
               sjppds(data, 10, ShuffleVariant::Full, Seed{6}));
}

TEST(Sjppds, RotationScheduleVisitsEveryLeadingColumn) {
  const auto data = random_data(20, 4, 1);
  std::vector<std::vector<std::string>> orders;
  sjppds(data, 3, ShuffleVariant::Simplified, Seed{1},
         [&](int pass, const std::vector<std::string>& names) {
           EXPECT_EQ(pass, static_cast<int>(orders.size()));
           orders.push_back(names);
         });
  const std::vector<std::vector<std::string>> expected{{"X1", "X2", "X3", "X4"},
                                                       {"X2", "X3", "X4", "X1"},
                                                       {"X3", "X4", "X1", "X2"},
                                                       {"X4", "X1", "X2", "X3"}};
  EXPECT_EQ(orders, expected);
}

TEST(Sjppds, DistinctValuesWithOneClassPerValueKeepRecords) {
  const auto data = random_data(40, 3, 9);
  const auto out = sjppds(data, 40 * 1000, ShuffleVariant::Full, Seed{2});
  EXPECT_EQ(rows_of(out, 3), rows_of(data, 3));
}

TEST(Sjppds, ArgumentErrors) {
  const auto data = random_data(10, 3, 1);
  EXPECT_THROW(sjppds(data, 0, ShuffleVariant::Full, Seed{}), InvalidParameter);
  EXPECT_THROW(sjppds(random_data(10, 1, 1), 3, ShuffleVariant::Simplified, Seed{}),
               InvalidInput);
}

TEST(Sjppds, MoreClassesPreserveCorrelationBetter) {
  // Bivariate normal with correlation 0.9.
  double err_coarse = 0.0, err_fine = 0.0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng rng(Seed{s});
    Eigen::MatrixXd x(4000, 2);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const double a = rng.normal(), b = rng.normal();
      x(i, 0) = 10 + a;
      x(i, 1) = 11 + 0.9 * a + std::sqrt(1 - 0.81) * b;
    }
    const DataMatrix data(x);
    const auto coarse = sjppds(data, 3, ShuffleVariant::Simplified, Seed{s});
    const auto fine = sjppds(data, 100, ShuffleVariant::Simplified, Seed{s});
    err_coarse += std::abs(stats::correlation(coarse.column(0), coarse.column(1)) - 0.9);
    err_fine += std::abs(stats::correlation(fine.column(0), fine.column(1)) - 0.9);
  }
  EXPECT_LT(err_fine, err_coarse);
}

}  // namespace
}  // namespace sdshuffle
