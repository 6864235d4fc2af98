// Copyright 2026 The anion-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANIONFORGE_STATS_HPP_
#define ANIONFORGE_STATS_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace anionforge {

// splitmix64: counter-based stream derivation so per-trial randomness is
// independent of thread count and evaluation order.
std::uint64_t splitmix64(std::uint64_t x);
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (counter + 1));
}

// Deterministic across standard libraries, unlike uniform_int_distribution.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
  return n <= 1 ? 0 : rng() % n;
}

template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[bounded_rand(rng, i)]);
  }
}

// Paired sign-flip permutation test, one-sided in the direction of
// mean(a - b) > 0. When 2^n <= permutations, all sign assignments are
// enumerated and p = #{stat >= observed} / 2^n (the identity assignment
// keeps p > 0); otherwise permutations are sampled and
// p = (1 + #{stat >= observed}) / (permutations + 1).
double permutation_test(const std::vector<double>& paired_a,
                        const std::vector<double>& paired_b,
                        std::int64_t permutations, std::uint64_t seed);

// flag[i] = p[i] < alpha / n.
std::vector<bool> bonferroni(const std::vector<double>& p_values, double alpha);

}  // namespace anionforge

#endif  // ANIONFORGE_STATS_HPP_
