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

#include "anionforge/contrast.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <random>

#include "anionforge/error.hpp"
#include "anionforge/io.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

std::set<std::string> common_set(const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

std::vector<ContrastPair> pair_events(const KnowledgeGraph& graph_a,
                                      const KnowledgeGraph& graph_b, RelationType relation,
                                      PairReport* report) {
  PairReport local;
  std::vector<ContrastPair> pairs;

  for (const Event& opposed : graph_b.heads()) {
    if (!opposed.source_head.has_value()) continue;
    const std::set<std::string>& tails_b = graph_b.tails(opposed.text, relation);
    if (tails_b.empty()) {
      ++local.empty_side;
      continue;
    }
    const Event* affirmative = graph_a.find_event(*opposed.source_head);
    if (affirmative == nullptr) {
      ++local.unresolved_source;
      local.skipped_heads.push_back(opposed.text);
      continue;
    }
    const std::set<std::string>& tails_a = graph_a.tails(affirmative->text, relation);
    if (tails_a.empty()) {
      ++local.empty_side;
      continue;
    }

    ContrastPair pair;
    pair.affirmative = *affirmative;
    pair.opposed = opposed;
    pair.relation = relation;
    pair.common = common_set(tails_a, tails_b);
    for (const std::string& t : tails_a) {
      if (!pair.common.contains(t)) pair.contrast_a.insert(t);
    }
    for (const std::string& t : tails_b) {
      if (!pair.common.contains(t)) pair.contrast_b.insert(t);
    }
    pairs.push_back(std::move(pair));
    ++local.pairs_emitted;
  }

  if (report != nullptr) *report = std::move(local);
  return pairs;
}

std::vector<ContrastPair> pair_events_all(const KnowledgeGraph& graph_a,
                                          const KnowledgeGraph& graph_b, PairReport* report) {
  PairReport total;
  std::vector<ContrastPair> pairs;
  for (RelationType r : all_relations()) {
    PairReport local;
    std::vector<ContrastPair> batch = pair_events(graph_a, graph_b, r, &local);
    pairs.insert(pairs.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
    total.pairs_emitted += local.pairs_emitted;
    total.unresolved_source += local.unresolved_source;
    total.empty_side += local.empty_side;
    total.skipped_heads.insert(total.skipped_heads.end(), local.skipped_heads.begin(),
                               local.skipped_heads.end());
  }
  if (report != nullptr) *report = std::move(total);
  return pairs;
}

std::string to_string(SampleOrigin o) {
  return o == SampleOrigin::kKgPositive ? "kg_positive" : "swapped_negative";
}

namespace {

LabeledSample make_sample(const Event& head, RelationType relation, const std::string& tail,
                          SampleOrigin origin, Polarity pair_polarity) {
  LabeledSample s;
  s.origin = origin;
  s.label = origin == SampleOrigin::kKgPositive ? 1 : 0;
  s.source_tuple = KnowledgeTuple{head, relation, tail};
  s.sentence = render_patterned_sentence(s.source_tuple);
  s.pair_polarity = pair_polarity;
  return s;
}

std::string sample_key(const LabeledSample& s) {
  return normalize_text(s.source_tuple.head.text) + "\x1f" + to_string(s.source_tuple.relation) +
         "\x1f" + normalize_text(s.source_tuple.tail) + "\x1f" + std::to_string(s.label);
}

}  // namespace

std::vector<LabeledSample> build_discriminator_dataset(const std::vector<ContrastPair>& pairs,
                                                       std::uint64_t seed,
                                                       DatasetReport* report) {
  DatasetReport local;

  // Candidate pools per opposed-event polarity, deduplicated on the tuple.
  std::array<std::vector<LabeledSample>, 4> positives;
  std::array<std::vector<LabeledSample>, 4> negatives;
  std::set<std::string> seen;

  auto push = [&](LabeledSample sample) {
    if (!seen.insert(sample_key(sample)).second) return;
    auto& pool = sample.label == 1 ? positives : negatives;
    pool[static_cast<int>(sample.pair_polarity)].push_back(std::move(sample));
  };

  for (const ContrastPair& pair : pairs) {
    if (pair.contrast_a.empty() && pair.contrast_b.empty()) {
      ++local.pairs_without_contrast;
      continue;
    }
    ++local.pairs_used;
    const Polarity polarity = pair.opposed.polarity;
    // Swapped negatives: each head takes the other side's contrast tails.
    for (const std::string& t : pair.contrast_b) {
      push(make_sample(pair.affirmative, pair.relation, t, SampleOrigin::kSwappedNegative,
                       polarity));
    }
    for (const std::string& t : pair.contrast_a) {
      push(make_sample(pair.opposed, pair.relation, t, SampleOrigin::kSwappedNegative,
                       polarity));
    }
    // Positives: the pair's own tuples.
    for (const std::string& t : pair.common) {
      push(make_sample(pair.affirmative, pair.relation, t, SampleOrigin::kKgPositive, polarity));
      push(make_sample(pair.opposed, pair.relation, t, SampleOrigin::kKgPositive, polarity));
    }
    for (const std::string& t : pair.contrast_a) {
      push(make_sample(pair.affirmative, pair.relation, t, SampleOrigin::kKgPositive, polarity));
    }
    for (const std::string& t : pair.contrast_b) {
      push(make_sample(pair.opposed, pair.relation, t, SampleOrigin::kKgPositive, polarity));
    }
  }

  // Balance per polarity class by downsampling the larger pool, then shuffle.
  std::vector<LabeledSample> dataset;
  for (int p = 0; p < 4; ++p) {
    auto& pos = positives[p];
    auto& neg = negatives[p];
    const std::string polarity_name = to_string(static_cast<Polarity>(p));
    if (!pos.empty() || !neg.empty()) {
      local.positive_candidates[polarity_name] = static_cast<std::int64_t>(pos.size());
      local.negative_candidates[polarity_name] = static_cast<std::int64_t>(neg.size());
    }
    const std::size_t keep = std::min(pos.size(), neg.size());
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(p)));
    for (auto* pool : {&pos, &neg}) {
      if (pool->size() > keep) {
        deterministic_shuffle(*pool, rng);
        pool->resize(keep);
      }
    }
    dataset.insert(dataset.end(), std::make_move_iterator(pos.begin()),
                   std::make_move_iterator(pos.end()));
    dataset.insert(dataset.end(), std::make_move_iterator(neg.begin()),
                   std::make_move_iterator(neg.end()));
  }

  std::mt19937_64 rng(derive_seed(seed, 99));
  deterministic_shuffle(dataset, rng);

  if (report != nullptr) *report = std::move(local);
  return dataset;
}

void save_dataset(const std::vector<LabeledSample>& samples, std::ostream& out,
                  std::string_view hash) {
  write_jsonl_meta(out, hash, "contrast");
  for (const LabeledSample& s : samples) {
    Json record;
    record["sentence"] = s.sentence;
    record["label"] = s.label;
    record["origin"] = to_string(s.origin);
    record["polarity"] = to_string(s.pair_polarity);
    out << record.dump() << '\n';
  }
}

std::vector<DatasetRecord> load_dataset(const std::string& path) {
  std::vector<DatasetRecord> records;
  for_each_jsonl_file(path, [&](const Json& j, std::int64_t line) {
    DatasetRecord r;
    try {
      r.sentence = j.at("sentence").get<std::string>();
      r.label = j.at("label").get<int>();
      r.origin = j.at("origin").get<std::string>();
      r.polarity = j.at("polarity").get<std::string>();
    } catch (const Json::exception& e) {
      throw FormatError(std::string("bad dataset record: ") + e.what(), line);
    }
    if (r.label != 0 && r.label != 1) throw FormatError("label must be 0 or 1", line);
    records.push_back(std::move(r));
  });
  return records;
}

}  // namespace anionforge
