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

#include "anionforge/kg.hpp"

#include <cctype>

#include <fstream>
#include <sstream>

#include "anionforge/error.hpp"
#include "anionforge/io.hpp"
#include "anionforge/log.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

namespace {

const char* const kRelationNames[kNumRelations] = {
    "xIntent", "xNeed", "xAttr", "xWant", "oWant", "xEffect", "oEffect", "xReact", "oReact",
};

const char* const kTsvHeader = "head\trelation\ttail\tsplit\tpolarity\tsource_head\tcue";

// Rewrites bare X/Y/Z tokens to the PersonX convention so both surface
// styles compare equal downstream. Whitespace is preserved.
std::string unify_person(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    if (token == "X") out += "PersonX";
    else if (token == "Y") out += "PersonY";
    else if (token == "Z") out += "PersonZ";
    else out += token;
  }
  return out;
}

std::string triple_key(const KnowledgeTuple& t) {
  return normalize_text(t.head.text) + "\x1f" + to_string(t.relation) + "\x1f" +
         normalize_text(t.tail);
}

}  // namespace

const std::vector<RelationType>& all_relations() {
  static const std::vector<RelationType> relations = {
      RelationType::kXIntent, RelationType::kXNeed,   RelationType::kXAttr,
      RelationType::kXWant,   RelationType::kOWant,   RelationType::kXEffect,
      RelationType::kOEffect, RelationType::kXReact,  RelationType::kOReact,
  };
  return relations;
}

std::string to_string(RelationType r) { return kRelationNames[static_cast<int>(r)]; }

RelationType parse_relation(std::string_view name) {
  for (int i = 0; i < kNumRelations; ++i) {
    if (name == kRelationNames[i]) return static_cast<RelationType>(i);
  }
  throw FormatError("unknown relation name: \"" + std::string(name) + "\"");
}

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::kAffirmative: return "affirmative";
    case Polarity::kLogical: return "logical";
    case Polarity::kSemiLogical: return "semi_logical";
    case Polarity::kContradiction: return "contradiction";
  }
  return "affirmative";
}

Polarity parse_polarity(std::string_view name) {
  if (name == "affirmative") return Polarity::kAffirmative;
  if (name == "logical") return Polarity::kLogical;
  if (name == "semi_logical") return Polarity::kSemiLogical;
  if (name == "contradiction") return Polarity::kContradiction;
  throw FormatError("unknown polarity: \"" + std::string(name) + "\"");
}

std::string to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  throw FormatError("unknown split: \"" + std::string(name) + "\"");
}

KgFormat parse_kg_format(std::string_view name) {
  if (name == "jsonl") return KgFormat::kJsonl;
  if (name == "tsv") return KgFormat::kTsv;
  throw FormatError("unknown format: \"" + std::string(name) + "\" (expected jsonl or tsv)");
}

void Event::validate() const {
  if (normalize_text(text).empty()) throw DataError("event text is empty");
  if (polarity != Polarity::kAffirmative) {
    if (!source_head.has_value() || normalize_text(*source_head).empty()) {
      throw DataError("derived event \"" + text + "\" lacks a source_head");
    }
  }
}

void KnowledgeTuple::validate() const {
  head.validate();
  if (normalize_text(tail).empty()) throw DataError("tuple tail is empty");
}

bool KnowledgeGraph::add(KnowledgeTuple tuple) {
  tuple.validate();
  const std::string key = triple_key(tuple);
  if (!triple_keys_.insert(key).second) return false;

  const std::string head_key = normalize_text(tuple.head.text);
  auto [it, inserted] = head_index_.try_emplace(head_key, heads_.size());
  if (inserted) {
    heads_.push_back(tuple.head);
  } else {
    const Event& existing = heads_[it->second];
    if (existing.polarity != tuple.head.polarity || existing.split != tuple.head.split ||
        existing.source_head != tuple.head.source_head) {
      throw DataError("conflicting metadata for head \"" + tuple.head.text + "\"");
    }
  }
  tail_index_[{head_key, tuple.relation}].insert(normalize_text(tuple.tail));
  tuples_.push_back(std::move(tuple));
  return true;
}

const std::set<std::string>& KnowledgeGraph::tails(std::string_view head_text,
                                                   RelationType r) const {
  static const std::set<std::string> empty;
  auto it = tail_index_.find({normalize_text(head_text), r});
  return it == tail_index_.end() ? empty : it->second;
}

const Event* KnowledgeGraph::find_event(std::string_view head_text) const {
  auto it = head_index_.find(normalize_text(head_text));
  return it == head_index_.end() ? nullptr : &heads_[it->second];
}

Event KnowledgeGraph::assign_split(Event derived) const {
  if (!derived.source_head.has_value()) {
    throw DataError("assign_split: event \"" + derived.text + "\" has no source_head");
  }
  const Event* source = find_event(*derived.source_head);
  if (source == nullptr) {
    throw DataError("assign_split: source head \"" + *derived.source_head +
                    "\" not found in graph");
  }
  derived.split = source->split;
  return derived;
}

void KnowledgeGraph::check_split_consistency() const {
  for (const Event& e : heads_) {
    if (e.polarity == Polarity::kAffirmative || !e.source_head.has_value()) continue;
    const Event* source = find_event(*e.source_head);
    if (source != nullptr && source->split != e.split) {
      throw DataError("split mismatch: \"" + e.text + "\" is " + to_string(e.split) +
                      " but its source \"" + source->text + "\" is " +
                      to_string(source->split));
    }
  }
}

namespace {

Event event_from_fields(std::string head, std::string split, std::string polarity,
                        std::optional<std::string> source_head, std::optional<std::string> cue,
                        std::int64_t line, const LoadOptions& options) {
  Event e;
  e.text = options.unify_person_tokens ? unify_person(head) : std::move(head);
  e.split = parse_split(split);
  e.polarity = parse_polarity(polarity);
  if (source_head.has_value()) {
    e.source_head =
        options.unify_person_tokens ? unify_person(*source_head) : std::move(*source_head);
  }
  e.cue = std::move(cue);
  try {
    e.validate();
  } catch (const DataError& err) {
    throw FormatError(err.what(), line);
  }
  return e;
}

KnowledgeTuple tuple_from_json(const Json& record, std::int64_t line,
                               const LoadOptions& options) {
  for (const char* key : {"head", "relation", "tail", "split", "polarity"}) {
    if (!record.contains(key)) {
      throw FormatError(std::string("missing field \"") + key + "\"", line);
    }
  }
  auto opt_string = [&](const char* key) -> std::optional<std::string> {
    if (!record.contains(key) || record[key].is_null()) return std::nullopt;
    return record[key].get<std::string>();
  };
  KnowledgeTuple t;
  try {
    t.head = event_from_fields(record["head"].get<std::string>(),
                               record["split"].get<std::string>(),
                               record["polarity"].get<std::string>(), opt_string("source_head"),
                               opt_string("cue"), line, options);
    t.relation = parse_relation(record["relation"].get<std::string>());
    t.tail = record["tail"].get<std::string>();
    t.validate();
  } catch (const FormatError& e) {
    if (e.line() >= 0) throw;
    throw FormatError(e.what(), line);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad field type: ") + e.what(), line);
  } catch (const DataError& e) {
    throw FormatError(e.what(), line);
  }
  return t;
}

KnowledgeTuple tuple_from_tsv(const std::vector<std::string>& fields, std::int64_t line,
                              const LoadOptions& options) {
  if (fields.size() != 7) {
    throw FormatError("expected 7 TSV columns, got " + std::to_string(fields.size()), line);
  }
  auto opt_field = [&](std::size_t i) -> std::optional<std::string> {
    if (fields[i].empty()) return std::nullopt;
    return fields[i];
  };
  KnowledgeTuple t;
  try {
    t.head = event_from_fields(fields[0], fields[3], fields[4], opt_field(5), opt_field(6),
                               line, options);
    t.relation = parse_relation(fields[1]);
    t.tail = fields[2];
    t.validate();
  } catch (const FormatError& e) {
    if (e.line() >= 0) throw;
    throw FormatError(e.what(), line);
  } catch (const DataError& e) {
    throw FormatError(e.what(), line);
  }
  return t;
}

}  // namespace

KnowledgeGraph load_kg(std::istream& in, KgFormat format, LoadOptions options,
                       LoadReport* report) {
  KnowledgeGraph graph;
  LoadReport local;
  auto add_tuple = [&](KnowledgeTuple t, std::int64_t line) {
    ++local.total_rows;
    if (!graph.add(std::move(t))) {
      ++local.duplicates;
      local.duplicate_lines.push_back(line);
    }
  };

  if (format == KgFormat::kJsonl) {
    for_each_jsonl(in, [&](const Json& record, std::int64_t line) {
      add_tuple(tuple_from_json(record, line, options), line);
    });
  } else {
    std::string line_text;
    std::int64_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line_text)) {
      ++line_no;
      if (line_text.empty() || line_text.front() == '#') continue;
      if (!saw_header) {
        std::string bare = line_text;
        if (!bare.empty() && bare.back() == '\r') bare.pop_back();
        if (bare != kTsvHeader) {
          throw FormatError("missing or wrong TSV header (expected \"" +
                                std::string(kTsvHeader) + "\")",
                            line_no);
        }
        saw_header = true;
        continue;
      }
      add_tuple(tuple_from_tsv(split_tsv_row(line_text, line_no), line_no, options), line_no);
    }
  }

  graph.check_split_consistency();
  if (local.duplicates > 0) {
    log_info("deduplicated " + std::to_string(local.duplicates) + " triples");
  }
  if (report != nullptr) *report = std::move(local);
  return graph;
}

KnowledgeGraph load_kg(const std::string& path, KgFormat format, LoadOptions options,
                       LoadReport* report) {
  std::ifstream in = open_input(path);
  return load_kg(in, format, options, report);
}

namespace {

Json tuple_to_json(const KnowledgeTuple& t) {
  Json record;
  record["head"] = t.head.text;
  record["relation"] = to_string(t.relation);
  record["tail"] = t.tail;
  record["split"] = to_string(t.head.split);
  record["polarity"] = to_string(t.head.polarity);
  record["source_head"] = t.head.source_head.has_value() ? Json(*t.head.source_head) : Json();
  record["cue"] = t.head.cue.has_value() ? Json(*t.head.cue) : Json();
  return record;
}

}  // namespace

void save_kg(const KnowledgeGraph& graph, std::ostream& out, KgFormat format,
             std::string_view hash) {
  if (format == KgFormat::kJsonl) {
    write_jsonl_meta(out, hash, "kg");
    for (const KnowledgeTuple& t : graph.tuples()) out << tuple_to_json(t).dump() << '\n';
    return;
  }
  if (!hash.empty()) out << "#config_hash=" << hash << '\n';
  out << kTsvHeader << '\n';
  for (const KnowledgeTuple& t : graph.tuples()) {
    out << tsv_escape(t.head.text) << '\t' << to_string(t.relation) << '\t'
        << tsv_escape(t.tail) << '\t' << to_string(t.head.split) << '\t'
        << to_string(t.head.polarity) << '\t'
        << (t.head.source_head ? tsv_escape(*t.head.source_head) : "") << '\t'
        << (t.head.cue ? tsv_escape(*t.head.cue) : "") << '\n';
  }
}

void save_kg(const KnowledgeGraph& graph, const std::string& path, KgFormat format,
             std::string_view hash) {
  std::ofstream out = open_output(path);
  save_kg(graph, out, format, hash);
}

namespace {

// Sentence templates per relation; {h} is prepended with a deduplicated
// period boundary.
const char* const kPatternPrefix[kNumRelations] = {
    "Because PersonX wanted",  // xIntent
    "Before, PersonX needed",  // xNeed
    "PersonX is seen as",      // xAttr
    "As a result, PersonX wants",
    "As a result, others want",
    "As a result, PersonX then",
    "As a result, others then",
    "As a result, PersonX feels",
    "As a result, others feel",
};

std::string trim_trailing_period(std::string_view s) {
  std::string out(s);
  while (!out.empty() && (out.back() == ' ' || out.back() == '.')) out.pop_back();
  return out;
}

}  // namespace

std::string render_patterned_sentence(std::string_view head_text, RelationType relation,
                                      std::string_view tail) {
  const std::string head = trim_trailing_period(head_text);
  const std::string tail_clean = trim_trailing_period(tail);
  if (head.empty()) throw DataError("cannot render: empty head");
  if (tail_clean.empty()) throw DataError("cannot render: empty tail");
  return head + ". " + kPatternPrefix[static_cast<int>(relation)] + " " + tail_clean + ".";
}

std::string render_patterned_sentence(const KnowledgeTuple& tuple) {
  return render_patterned_sentence(tuple.head.text, tuple.relation, tuple.tail);
}

}  // namespace anionforge
