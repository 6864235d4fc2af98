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
//
// Common/contrast tail sets for paired events and the balanced contrastive
// dataset built by swapping contrast tails across a pair.

#ifndef ANIONFORGE_CONTRAST_HPP_
#define ANIONFORGE_CONTRAST_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "anionforge/kg.hpp"

namespace anionforge {

struct ContrastPair {
  Event affirmative;
  Event opposed;
  RelationType relation = RelationType::kXIntent;
  std::set<std::string> common;      // tails(affirmative) ∩ tails(opposed)
  std::set<std::string> contrast_a;  // only under the affirmative event
  std::set<std::string> contrast_b;  // only under the opposed event
};

std::set<std::string> common_set(const std::set<std::string>& a,
                                 const std::set<std::string>& b);

struct PairReport {
  std::int64_t pairs_emitted = 0;
  std::int64_t unresolved_source = 0;
  std::int64_t empty_side = 0;  // one side had no tails under the relation
  std::vector<std::string> skipped_heads;
};

// One pair per (opposed head with a resolvable source, relation) where both
// tail sets are nonempty. graph_a holds the affirmative events, graph_b the
// opposed ones.
std::vector<ContrastPair> pair_events(const KnowledgeGraph& graph_a,
                                      const KnowledgeGraph& graph_b,
                                      RelationType relation,
                                      PairReport* report = nullptr);

// All nine relations, concatenated in relation order.
std::vector<ContrastPair> pair_events_all(const KnowledgeGraph& graph_a,
                                          const KnowledgeGraph& graph_b,
                                          PairReport* report = nullptr);

enum class SampleOrigin { kKgPositive, kSwappedNegative };

std::string to_string(SampleOrigin o);

struct LabeledSample {
  std::string sentence;  // patterned rendering of source_tuple
  int label = 0;         // 1 iff origin == kKgPositive
  SampleOrigin origin = SampleOrigin::kKgPositive;
  KnowledgeTuple source_tuple;
  Polarity pair_polarity = Polarity::kContradiction;  // polarity of the opposed event
};

struct DatasetReport {
  std::int64_t pairs_used = 0;
  std::int64_t pairs_without_contrast = 0;
  // per opposed-event polarity: candidate pool sizes before balancing
  std::map<std::string, std::int64_t> positive_candidates;
  std::map<std::string, std::int64_t> negative_candidates;
};

// Negatives pair each head with the other side's contrast tails; positives
// come from the original tuples of the paired heads. Balanced exactly, per
// opposed-event polarity and therefore globally; the larger pool is
// downsampled uniformly (seeded). Deterministic in (pairs, seed).
std::vector<LabeledSample> build_discriminator_dataset(const std::vector<ContrastPair>& pairs,
                                                       std::uint64_t seed,
                                                       DatasetReport* report = nullptr);

// JSONL dataset record: {"sentence", "label", "origin", "polarity"}.
void save_dataset(const std::vector<LabeledSample>& samples, std::ostream& out,
                  std::string_view config_hash = {});
struct DatasetRecord {
  std::string sentence;
  int label = 0;
  std::string origin;
  std::string polarity;
};
std::vector<DatasetRecord> load_dataset(const std::string& path);

}  // namespace anionforge

#endif  // ANIONFORGE_CONTRAST_HPP_
