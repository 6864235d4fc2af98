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
// Canonical data model for knowledge tuples: events, relations, the
// deduplicated indexed graph, and JSONL/TSV serialization.

#ifndef ANIONFORGE_KG_HPP_
#define ANIONFORGE_KG_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anionforge {

// The nine inference dimensions. Parsing any other name is an error.
enum class RelationType {
  kXIntent,
  kXNeed,
  kXAttr,
  kXWant,
  kOWant,
  kXEffect,
  kOEffect,
  kXReact,
  kOReact,
};

inline constexpr int kNumRelations = 9;

const std::vector<RelationType>& all_relations();
std::string to_string(RelationType r);
RelationType parse_relation(std::string_view name);  // throws FormatError

enum class Polarity { kAffirmative, kLogical, kSemiLogical, kContradiction };

std::string to_string(Polarity p);
Polarity parse_polarity(std::string_view name);

enum class Split { kTrain, kDev, kTest };

std::string to_string(Split s);
Split parse_split(std::string_view name);

// A head event. Derived events (any non-affirmative polarity) must name the
// affirmative event they came from and share its split.
struct Event {
  std::string text;
  Polarity polarity = Polarity::kAffirmative;
  std::optional<std::string> source_head;
  Split split = Split::kTrain;
  std::optional<std::string> cue;

  // Throws DataError if text is empty after normalization or a derived
  // event lacks source_head.
  void validate() const;

  friend bool operator==(const Event&, const Event&) = default;
};

struct KnowledgeTuple {
  Event head;
  RelationType relation = RelationType::kXIntent;
  std::string tail;

  void validate() const;

  friend bool operator==(const KnowledgeTuple&, const KnowledgeTuple&) = default;
};

enum class KgFormat { kJsonl, kTsv };

KgFormat parse_kg_format(std::string_view name);

struct LoadOptions {
  // Rewrite bare "X"/"Y"/"Z" subject tokens to "PersonX"/"PersonY"/"PersonZ"
  // so both surface conventions match exactly. Toggleable, see README.
  bool unify_person_tokens = true;
};

struct LoadReport {
  std::int64_t total_rows = 0;
  std::int64_t duplicates = 0;
  std::vector<std::int64_t> duplicate_lines;
};

// Immutable once built; safe to share across threads.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  // Adds a tuple unless an identical (head, relation, tail) triple is
  // already present under normalization. Returns false on duplicates.
  bool add(KnowledgeTuple tuple);

  const std::vector<KnowledgeTuple>& tuples() const { return tuples_; }
  bool empty() const { return tuples_.empty(); }
  std::size_t size() const { return tuples_.size(); }

  // Tails stored under (head text, relation); keys are normalized head text.
  const std::set<std::string>& tails(std::string_view head_text, RelationType r) const;

  // Event metadata for a head, looked up by normalized text.
  const Event* find_event(std::string_view head_text) const;

  // Distinct head events in first-seen order.
  const std::vector<Event>& heads() const { return heads_; }

  // Copies the split of the event named by derived.source_head onto
  // `derived`. Throws DataError when the source head cannot be resolved.
  Event assign_split(Event derived) const;

  // Verifies the split of every derived event matches its source event's
  // split wherever the source resolves in this graph. Throws DataError.
  void check_split_consistency() const;

 private:
  std::vector<KnowledgeTuple> tuples_;
  std::vector<Event> heads_;
  std::map<std::string, std::size_t> head_index_;            // normalized text -> heads_ slot
  std::map<std::pair<std::string, RelationType>, std::set<std::string>> tail_index_;
  std::set<std::string> triple_keys_;
};

KnowledgeGraph load_kg(const std::string& path, KgFormat format,
                       LoadOptions options = {}, LoadReport* report = nullptr);
KnowledgeGraph load_kg(std::istream& in, KgFormat format, LoadOptions options = {},
                       LoadReport* report = nullptr);

// Writes one record per tuple. `config_hash`, when non-empty, is embedded in
// a leading metadata line that loaders skip.
void save_kg(const KnowledgeGraph& graph, const std::string& path, KgFormat format,
             std::string_view config_hash = {});
void save_kg(const KnowledgeGraph& graph, std::ostream& out, KgFormat format,
             std::string_view config_hash = {});

// Fills {h} and {t} into the per-relation sentence template, deduplicating
// the period between the head and the template.
std::string render_patterned_sentence(const KnowledgeTuple& tuple);
std::string render_patterned_sentence(std::string_view head_text, RelationType relation,
                                      std::string_view tail);

}  // namespace anionforge

#endif  // ANIONFORGE_KG_HPP_
