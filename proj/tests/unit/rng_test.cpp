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

#include "sdshuffle/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

namespace sdshuffle {
namespace {

TEST(DeriveSeed, DependsOnEveryKey) {
  const Seed base{42};
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 20; ++a) {
    for (std::uint64_t b = 0; b < 20; ++b) seen.insert(derive_seed(base, {a, b}).value);
  }
  EXPECT_EQ(seen.size(), 400u);
  EXPECT_NE(derive_seed(base, {1, 2}), derive_seed(base, {2, 1}));
  EXPECT_NE(derive_seed(base, {0}), derive_seed(base, {0, 0}));
  EXPECT_EQ(derive_seed(base, {3, 4}), derive_seed(Seed{42}, {3, 4}));
}

TEST(Rng, SameSeedSameSequence) {
  Rng a(Seed{9}), b(Seed{9}), c(Seed{10});
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, UniformInUnitInterval) {
  Rng rng(Seed{1});
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Rng, BelowStaysInRangeAndIsUniform) {
  Rng rng(Seed{2});
  std::array<int, 7> counts{};
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
  EXPECT_LT(chi2, 22.46);  // chi-square 0.999 quantile, 6 df
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, NormalMoments) {
  Rng rng(Seed{3});
  const int n = 200000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.015);
}

TEST(ShuffleIndices, Singleton) {
  Rng rng(Seed{0});
  EXPECT_EQ(shuffle_indices({4}, rng), std::vector<std::int64_t>({4}));
}

TEST(ShuffleIndices, IsPermutationOfInput) {
  Rng rng(Seed{5});
  std::vector<std::int64_t> in(50);
  std::iota(in.begin(), in.end(), 100);
  auto out = shuffle_indices(in, rng);
  EXPECT_NE(out, in);
  std::sort(out.begin(), out.end());
  EXPECT_EQ(out, in);
}

TEST(ShuffleIndices, TwoElementsEquallyLikely) {
  int swapped = 0;
  const int draws = 20000;
  for (int s = 0; s < draws; ++s) {
    Rng rng(Seed{static_cast<std::uint64_t>(s)});
    if (shuffle_indices({1, 2}, rng).front() == 2) ++swapped;
  }
  const double expected = draws / 2.0;
  const double chi2 = 2 * (swapped - expected) * (swapped - expected) / expected;
  EXPECT_LT(chi2, 10.83);  // 0.999 quantile, 1 df
}

TEST(ShuffleIndices, ThreeElementPermutationFrequencies) {
  std::map<std::vector<std::int64_t>, int> counts;
  const int draws = 60000;
  for (int s = 0; s < draws; ++s) {
    Rng rng(Seed{static_cast<std::uint64_t>(s) + 1000});
    ++counts[shuffle_indices({1, 2, 3}, rng)];
  }
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [perm, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / 6.0, 0.02);
  }
}

TEST(ShuffleIndices, FourElementChiSquare) {
  std::map<std::vector<std::int64_t>, int> counts;
  const int draws = 48000;
  Rng rng(Seed{77});
  for (int s = 0; s < draws; ++s) ++counts[shuffle_indices({0, 1, 2, 3}, rng)];
  ASSERT_EQ(counts.size(), 24u);
  const double expected = draws / 24.0;
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 49.73);  // 0.999 quantile, 23 df
}

}  // namespace
}  // namespace sdshuffle
