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

#include "sdshuffle/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "sdshuffle/stats.hpp"
#include "test_data.hpp"

namespace sdshuffle {
namespace {

using testing::from_rows;
using testing::random_data;
using testing::sorted_column;

TEST(MaskMethod, NamesRoundTrip) {
  for (auto m : {MaskMethod::SjppdsFull, MaskMethod::SjppdsSimplified, MaskMethod::Mdav,
                 MaskMethod::NoiseIndependent, MaskMethod::NoiseCorrelated,
                 MaskMethod::RankSwap}) {
    EXPECT_EQ(parse_mask_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_mask_method("cart"), InvalidParameter);
  EXPECT_TRUE(is_mapping_free(MaskMethod::SjppdsSimplified));
  EXPECT_FALSE(is_mapping_free(MaskMethod::RankSwap));
  EXPECT_TRUE(is_deterministic(MaskMethod::Mdav));
}

TEST(MaskSpec, ParameterRanges) {
  EXPECT_NO_THROW(validate({MaskMethod::SjppdsFull, 1, {}}));
  EXPECT_THROW(validate({MaskMethod::SjppdsFull, 0, {}}), InvalidParameter);
  EXPECT_THROW(validate({MaskMethod::SjppdsSimplified, 2.5, {}}), InvalidParameter);
  EXPECT_NO_THROW(validate({MaskMethod::Mdav, 2, {}}));
  EXPECT_THROW(validate({MaskMethod::Mdav, 1, {}}), InvalidParameter);
  EXPECT_NO_THROW(validate({MaskMethod::NoiseIndependent, 0, {}}));
  EXPECT_THROW(validate({MaskMethod::NoiseCorrelated, -1, {}}), InvalidParameter);
  EXPECT_NO_THROW(validate({MaskMethod::RankSwap, 100, {}}));
  EXPECT_THROW(validate({MaskMethod::RankSwap, 100.5, {}}), InvalidParameter);
  EXPECT_THROW(validate({MaskMethod::RankSwap, std::nan(""), {}}), InvalidParameter);
}

TEST(Mdav, FourCollinearPoints) {
  const auto data = from_rows({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  const auto groups = mdav_partition(data, 2);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(groups[1], (std::vector<std::size_t>{2, 3}));
  const auto out = mdav_microaggregate(data, 2);
  EXPECT_DOUBLE_EQ(out(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(out(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(out(2, 0), 2.5);
  EXPECT_DOUBLE_EQ(out(3, 0), 2.5);
}

TEST(Mdav, GroupSizesAndMeans) {
  Rng rng(Seed{31});
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(8));
    const std::size_t n = 2 * static_cast<std::size_t>(k) + rng.below(200);
    const std::size_t p = 1 + rng.below(5);
    const auto data = random_data(n, p, 500 + static_cast<std::uint64_t>(trial));
    const auto groups = mdav_partition(data, k);
    std::vector<int> covered(n, 0);
    for (const auto& g : groups) {
      EXPECT_GE(g.size(), static_cast<std::size_t>(k));
      EXPECT_LE(g.size(), static_cast<std::size_t>(2 * k - 1));
      for (auto r : g) ++covered[r];
    }
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
    const auto out = mdav_microaggregate(data, k);
    for (std::size_t j = 0; j < p; ++j) {
      EXPECT_NEAR(stats::mean(out.column(j)), stats::mean(data.column(j)), 1e-12);
    }
  }
}

TEST(Mdav, DeterministicAndNeedsTwoK) {
  const auto data = random_data(30, 3, 2);
  EXPECT_EQ(apply_mask(data, {MaskMethod::Mdav, 4, Seed{1}}),
            apply_mask(data, {MaskMethod::Mdav, 4, Seed{2}}));
  EXPECT_THROW(mdav_microaggregate(data, 16), InvalidParameter);
  EXPECT_NO_THROW(mdav_microaggregate(data, 15));
}

TEST(Noise, ZeroPercentIsIdentity) {
  const auto data = random_data(50, 3, 1);
  EXPECT_EQ(add_noise(data, 0, false, Seed{1}), data);
  EXPECT_EQ(add_noise(data, 0, true, Seed{1}), data);
}

TEST(Noise, IndependentDoublesVarianceAtHundredPercent) {
  const auto data = random_data(10000, 3, 4);
  const auto out = add_noise(data, 100, false, Seed{9});
  for (std::size_t j = 0; j < 3; ++j) {
    const double ratio = stats::variance(out.column(j)) / stats::variance(data.column(j));
    EXPECT_NEAR(ratio, 2.0, 0.2);
    EXPECT_NEAR(stats::mean(out.column(j)), stats::mean(data.column(j)), 0.05);
  }
}

TEST(Noise, CorrelatedNoiseFollowsDataCorrelation) {
  Rng rng(Seed{12});
  Eigen::MatrixXd x(10000, 3);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double a = rng.normal(), b = rng.normal(), c = rng.normal();
    x(i, 0) = a;
    x(i, 1) = 0.8 * a + 0.6 * b;
    x(i, 2) = -0.5 * a + c;
  }
  const DataMatrix data(x);
  const auto out = add_noise(data, 100, true, Seed{3});
  const DataMatrix noise(out.values() - data.values());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      EXPECT_NEAR(stats::correlation(noise.column(a), noise.column(b)),
                  stats::correlation(data.column(a), data.column(b)), 0.05);
    }
  }
}

TEST(Noise, SingularCovarianceFallsBackWithWarning) {
  Eigen::MatrixXd x(100, 2);
  Rng rng(Seed{1});
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    x(i, 0) = rng.normal();
    x(i, 1) = 2 * x(i, 0);
  }
  Diagnostics diag;
  const auto out = add_noise(DataMatrix(x), 10, true, Seed{2}, &diag);
  EXPECT_FALSE(diag.empty());
  EXPECT_FALSE(out == DataMatrix(x));
}

TEST(RankSwap, ZeroWindowIsIdentity) {
  const auto data = random_data(100, 3, 1);
  EXPECT_EQ(rank_swap(data, 0, Seed{1}), data);
  EXPECT_EQ(rank_swap(data, 0.5, Seed{1}), data);  // floor(0.5) = 0
}

TEST(RankSwap, PermutesEachColumnWithinWindow) {
  const auto data = random_data(100, 3, 7);
  std::vector<SwapRecord> log;
  const auto out = rank_swap(data, 10, Seed{5}, &log);
  ASSERT_FALSE(log.empty());
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sorted_column(out, j), sorted_column(data, j));
  std::set<std::pair<std::size_t, std::int64_t>> used;
  for (const auto& s : log) {
    EXPECT_GT(s.rank_b, s.rank_a);
    EXPECT_LE(s.rank_b - s.rank_a, 10);
    EXPECT_TRUE(used.insert({s.column, s.rank_a}).second);
    EXPECT_TRUE(used.insert({s.column, s.rank_b}).second);
  }
  EXPECT_FALSE(out == data);
}

TEST(RankSwap, SwapsExchangeTheRankedValues) {
  const auto data = from_rows({{5}, {1}, {4}, {2}, {3}});
  std::vector<SwapRecord> log;
  const auto out = rank_swap(data, 100, Seed{3}, &log);
  std::vector<double> expected{1, 2, 3, 4, 5};  // value at each rank
  for (const auto& s : log) std::swap(expected[s.rank_a - 1], expected[s.rank_b - 1]);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto rank = static_cast<std::size_t>(data(i, 0)) - 1;
    EXPECT_EQ(out(i, 0), expected[rank]);
  }
}

TEST(ApplyMask, KeepsShapeNamesAndIsDeterministic) {
  const DataMatrix data(random_data(60, 3, 2).values(), {"a", "b", "c"});
  for (auto [method, param] : std::vector<std::pair<MaskMethod, double>>{
           {MaskMethod::SjppdsFull, 5},
           {MaskMethod::SjppdsSimplified, 5},
           {MaskMethod::Mdav, 3},
           {MaskMethod::NoiseIndependent, 10},
           {MaskMethod::NoiseCorrelated, 10},
           {MaskMethod::RankSwap, 10}}) {
    const auto a = apply_mask(data, {method, param, Seed{4}});
    EXPECT_EQ(a.rows(), 60u);
    EXPECT_EQ(a.column_names(), data.column_names());
    EXPECT_EQ(a, apply_mask(data, {method, param, Seed{4}})) << to_string(method);
  }
}

}  // namespace
}  // namespace sdshuffle
