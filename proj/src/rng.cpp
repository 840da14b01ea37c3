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

#include <cmath>

namespace sdshuffle {
namespace {

__extension__ typedef unsigned __int128 U128;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Seed derive_seed(Seed seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = splitmix64(seed.value);
  for (std::uint64_t key : keys) {
    h = splitmix64(h ^ splitmix64(key + 0x632be59bd9b4e019ULL));
  }
  return Seed{h};
}

Rng::Rng(Seed seed) : state_(splitmix64(seed.value)) {}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-and-reject; exact for every bound.
  U128 m =
      static_cast<U128>(next_u64()) * static_cast<U128>(bound);
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<U128>(next_u64()) *
          static_cast<U128>(bound);
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

std::vector<std::int64_t> shuffle_indices(std::vector<std::int64_t> indices,
                                          Rng& rng) {
  shuffle_in_place(std::span<std::int64_t>(indices), rng);
  return indices;
}

}  // namespace sdshuffle
