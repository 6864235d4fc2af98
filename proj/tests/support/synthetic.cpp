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

#include "support/synthetic.hpp"

#include <algorithm>
#include <array>
#include <memory>

#include "anionforge/negation.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/text.hpp"

namespace anionforge::testing {

namespace {

// CVCV words from per-pool consonant sets; the sets are disjoint, so the
// pools never share a token.
std::vector<std::string> make_pool(const std::string& consonants, int count, int salt) {
  static const std::string vowels = "aeiou";
  std::vector<std::string> words;
  words.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t h = splitmix64(static_cast<std::uint64_t>(i * 37 + salt));
    std::string w;
    w.push_back(consonants[h % consonants.size()]);
    w.push_back(vowels[(h >> 8) % vowels.size()]);
    w.push_back(consonants[(h >> 16) % consonants.size()]);
    w.push_back(vowels[(h >> 24) % vowels.size()]);
    w.push_back(consonants[(h >> 32) % consonants.size()]);
    w.push_back(vowels[(h >> 40) % vowels.size()]);
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

const std::array<const char*, 25> kVerbs = {
    "plays",  "builds",  "paints",  "cleans",   "carries", "watches", "opens",
    "visits", "brushes", "checks",  "counts",   "covers",  "crosses", "delivers",
    "designs", "enjoys", "fills",   "follows",  "guards",  "handles", "joins",
    "lifts",  "mixes",   "obtains", "prepares",
};

const std::array<const char*, 25> kNouns = {
    "piano",  "garden", "fence",  "kitchen", "wagon",  "engine", "ladder",
    "mirror", "carpet", "window", "basket",  "guitar", "hallway", "journal",
    "meadow", "orchard", "pantry", "quilt",  "cottage", "shelf",  "stable",
    "teapot", "trail",  "violin", "workshop",
};

std::string tail_text(const std::vector<std::string>& pool, std::uint64_t key) {
  const std::uint64_t h = splitmix64(key);
  const std::string& w1 = pool[h % pool.size()];
  const std::string& w2 = pool[(h >> 20) % pool.size()];
  return w1 + " " + w2;
}

Split split_for_pair(int i) {
  const int bucket = i % 10;
  if (bucket < 7) return Split::kTrain;
  if (bucket < 8) return Split::kDev;
  return Split::kTest;
}

}  // namespace

PlantedKg build_planted_kg(const PlantedOptions& options) {
  PlantedKg kg;
  const std::vector<std::string> pool_a = make_pool("bdfg", 60, 11);
  const std::vector<std::string> pool_b = make_pool("klmn", 60, 23);
  const std::vector<std::string> pool_c = make_pool("rstv", 24, 31);
  kg.pool_affirmative.insert(pool_a.begin(), pool_a.end());
  kg.pool_opposed.insert(pool_b.begin(), pool_b.end());
  kg.pool_common.insert(pool_c.begin(), pool_c.end());

  for (int i = 0; i < options.pairs; ++i) {
    const std::string head = std::string("PersonX ") + kVerbs[i % kVerbs.size()] + " the " +
                             kNouns[(i / kVerbs.size()) % kNouns.size()];
    Event affirmative;
    affirmative.text = head;
    affirmative.split = split_for_pair(i);

    NegationResult negated = negate_logical(head);
    Event opposed = negated.event;
    opposed.split = affirmative.split;
    kg.opposed_heads.insert(normalize_text(opposed.text));

    for (RelationType relation : options.relations) {
      const std::uint64_t base_key =
          options.seed * 1000003ULL + static_cast<std::uint64_t>(i) * 797ULL +
          static_cast<std::uint64_t>(relation) * 131071ULL;
      for (int j = 0; j < options.tails_per_side; ++j) {
        kg.affirmative.add(
            {affirmative, relation, tail_text(pool_a, base_key + 2 * j)});
        kg.opposed.add({opposed, relation, tail_text(pool_b, base_key + 2 * j + 1)});
      }
      for (int j = 0; j < options.common_tails; ++j) {
        const std::string common = tail_text(pool_c, base_key + 1000 + j);
        kg.affirmative.add({affirmative, relation, common});
        kg.opposed.add({opposed, relation, common});
      }
    }
  }
  return kg;
}

int PlantedKg::label(const std::string& head, RelationType, const std::string& tail) const {
  const bool opposed = opposed_heads.contains(normalize_text(head));
  const std::set<std::string>& own = opposed ? pool_opposed : pool_affirmative;
  const std::set<std::string>& other = opposed ? pool_affirmative : pool_opposed;
  int pool_tokens = 0;
  for (const std::string& tok : feature_tokens(tail)) {
    if (own.contains(tok) || pool_common.contains(tok)) {
      ++pool_tokens;
      continue;
    }
    if (other.contains(tok)) return 0;
  }
  return pool_tokens > 0 ? 1 : 0;
}

LabelSource PlantedKg::oracle() const {
  // Copy the pool tables so the source outlives this object.
  auto self = std::make_shared<PlantedKg>(*this);
  return LabelSource::from_oracle(
      [self](const std::string& head, RelationType relation, const std::string& tail) {
        return self->label(head, relation, tail);
      });
}

}  // namespace anionforge::testing
