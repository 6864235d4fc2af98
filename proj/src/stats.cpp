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

#include "anionforge/stats.hpp"

#include <cmath>

#include "anionforge/error.hpp"

namespace anionforge {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double permutation_test(const std::vector<double>& paired_a,
                        const std::vector<double>& paired_b, std::int64_t permutations,
                        std::uint64_t seed) {
  if (paired_a.size() != paired_b.size() || paired_a.empty()) {
    throw DataError("permutation_test: paired inputs must be nonempty and equal length");
  }
  if (permutations < 1) throw DataError("permutation_test: permutations must be >= 1");

  const std::size_t n = paired_a.size();
  std::vector<double> diff(n);
  double observed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = paired_a[i] - paired_b[i];
    observed += diff[i];
  }
  observed /= static_cast<double>(n);

  // Exhaustive enumeration whenever the full sign-flip space fits in the
  // permutation budget; the identity assignment is included, so p > 0.
  if (n < 63 && (1LL << n) <= permutations) {
    const std::uint64_t total = 1ULL << n;
    std::uint64_t at_least = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      double stat = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        stat += (mask >> i) & 1ULL ? -diff[i] : diff[i];
      }
      stat /= static_cast<double>(n);
      if (stat >= observed) ++at_least;
    }
    return static_cast<double>(at_least) / static_cast<double>(total);
  }

  std::uint64_t at_least = 0;
  for (std::int64_t trial = 0; trial < permutations; ++trial) {
    // Counter-based per-trial stream: results do not depend on evaluation
    // order, so trials could run on any number of threads.
    std::uint64_t state = derive_seed(seed, static_cast<std::uint64_t>(trial));
    double stat = 0.0;
    std::uint64_t bits = 0;
    int bits_left = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits_left == 0) {
        state = splitmix64(state);
        bits = state;
        bits_left = 64;
      }
      stat += (bits & 1ULL) ? -diff[i] : diff[i];
      bits >>= 1;
      --bits_left;
    }
    stat /= static_cast<double>(n);
    if (stat >= observed) ++at_least;
  }
  return static_cast<double>(1 + at_least) / static_cast<double>(permutations + 1);
}

std::vector<bool> bonferroni(const std::vector<double>& p_values, double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) throw DataError("bonferroni: alpha must be in (0,1)");
  std::vector<bool> flags(p_values.size());
  if (p_values.empty()) return flags;
  const double threshold = alpha / static_cast<double>(p_values.size());
  for (std::size_t i = 0; i < p_values.size(); ++i) flags[i] = p_values[i] < threshold;
  return flags;
}

}  // namespace anionforge
