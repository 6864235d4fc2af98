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

#include <random>
#include <sstream>

#include "anionforge/error.hpp"
#include "anionforge/kg.hpp"
#include "anionforge/text.hpp"
#include "doctest.h"

using namespace anionforge;

namespace {

Event affirmative(const std::string& text, Split split = Split::kTrain) {
  Event e;
  e.text = text;
  e.split = split;
  return e;
}

KnowledgeGraph random_graph(std::mt19937_64& rng, int tuples) {
  const char* heads[] = {"PersonX plays the piano", "PersonX eats a salad",
                         "PersonX buys a car", "PersonX walks the dog"};
  const char* tails[] = {"to relax", "to be healthy", "to get around", "happy",
                         "tired", "to exercise"};
  KnowledgeGraph graph;
  for (int i = 0; i < tuples; ++i) {
    Event head = affirmative(heads[rng() % 4], static_cast<Split>(rng() % 3));
    // Keep per-head metadata consistent: derive the split from the text.
    head.split = static_cast<Split>(normalize_text(head.text).size() % 3);
    const RelationType relation = static_cast<RelationType>(rng() % kNumRelations);
    graph.add({head, relation, tails[rng() % 6]});
  }
  return graph;
}

}  // namespace

TEST_SUITE_BEGIN("kg");

TEST_CASE("relation enum is closed at nine members") {
  CHECK(all_relations().size() == 9);
  CHECK(to_string(parse_relation("xIntent")) == "xIntent");
  CHECK(to_string(parse_relation("oReact")) == "oReact");
  CHECK_THROWS_AS(parse_relation("xFoo"), FormatError);
}

TEST_CASE("duplicate triples deduplicate with a count") {
  std::istringstream in(
      R"({"head": "PersonX eats", "relation": "xWant", "tail": "food", "split": "train", "polarity": "affirmative", "source_head": null, "cue": null}
{"head": "PersonX eats", "relation": "xWant", "tail": "food", "split": "train", "polarity": "affirmative", "source_head": null, "cue": null}
)");
  LoadReport report;
  const KnowledgeGraph graph = load_kg(in, KgFormat::kJsonl, {}, &report);
  CHECK(graph.size() == 1);
  CHECK(report.duplicates == 1);
  CHECK(report.duplicate_lines == std::vector<std::int64_t>{2});
}

TEST_CASE("empty file loads an empty graph") {
  std::istringstream in("");
  CHECK(load_kg(in, KgFormat::kJsonl).empty());
}

TEST_CASE("unknown relation fails with the line number") {
  std::istringstream in(
      R"({"head": "PersonX eats", "relation": "xFoo", "tail": "food", "split": "train", "polarity": "affirmative"}
)");
  try {
    load_kg(in, KgFormat::kJsonl);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("xFoo") != std::string::npos);
  }
}

TEST_CASE("X is unified to PersonX at load time") {
  std::istringstream in(
      R"({"head": "X eats a salad", "relation": "xWant", "tail": "to be healthy", "split": "train", "polarity": "affirmative", "source_head": null, "cue": null}
)");
  const KnowledgeGraph graph = load_kg(in, KgFormat::kJsonl);
  CHECK(graph.find_event("PersonX eats a salad") != nullptr);
  CHECK(graph.tails("personx eats a salad", RelationType::kXWant).size() == 1);

  std::istringstream in2(
      R"({"head": "X eats a salad", "relation": "xWant", "tail": "to be healthy", "split": "train", "polarity": "affirmative", "source_head": null, "cue": null}
)");
  LoadOptions no_unify;
  no_unify.unify_person_tokens = false;
  const KnowledgeGraph raw = load_kg(in2, KgFormat::kJsonl, no_unify);
  CHECK(raw.find_event("X eats a salad") != nullptr);
  CHECK(raw.find_event("PersonX eats a salad") == nullptr);
}

TEST_CASE("round trip through both formats preserves the graph") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const KnowledgeGraph graph = random_graph(rng, 1 + static_cast<int>(rng() % 30));
    for (KgFormat format : {KgFormat::kJsonl, KgFormat::kTsv}) {
      std::ostringstream out;
      save_kg(graph, out, format);
      std::istringstream in(out.str());
      const KnowledgeGraph reloaded = load_kg(in, format);
      REQUIRE(reloaded.size() == graph.size());
      for (std::size_t i = 0; i < graph.size(); ++i) {
        CHECK(reloaded.tuples()[i] == graph.tuples()[i]);
      }
    }
  }
}

TEST_CASE("tsv escaping survives tabs and newlines") {
  KnowledgeGraph graph;
  Event head = affirmative("PersonX writes\ta\nnote");
  graph.add({head, RelationType::kXEffect, "gets\\it done"});
  std::ostringstream out;
  save_kg(graph, out, KgFormat::kTsv);
  std::istringstream in(out.str());
  const KnowledgeGraph reloaded = load_kg(in, KgFormat::kTsv);
  REQUIRE(reloaded.size() == 1);
  CHECK(reloaded.tuples()[0].head.text == "PersonX writes\ta\nnote");
  CHECK(reloaded.tuples()[0].tail == "gets\\it done");
}

TEST_CASE("derived events need a source head") {
  Event derived;
  derived.text = "PersonX does not eat";
  derived.polarity = Polarity::kLogical;
  CHECK_THROWS_AS(derived.validate(), DataError);
  derived.source_head = "PersonX eats";
  CHECK_NOTHROW(derived.validate());
}

TEST_CASE("assign_split copies the source split") {
  KnowledgeGraph graph;
  graph.add({affirmative("PersonX eats", Split::kTest), RelationType::kXWant, "food"});
  Event derived;
  derived.text = "PersonX does not eat";
  derived.polarity = Polarity::kLogical;
  derived.source_head = "PersonX eats";
  derived.split = Split::kTrain;
  CHECK(graph.assign_split(derived).split == Split::kTest);

  derived.source_head = "PersonX sleeps";
  CHECK_THROWS_AS(graph.assign_split(derived), DataError);
}

TEST_CASE("split consistency is checked at load") {
  std::istringstream in(
      R"({"head": "PersonX eats", "relation": "xWant", "tail": "food", "split": "train", "polarity": "affirmative", "source_head": null, "cue": null}
{"head": "PersonX does not eat", "relation": "xWant", "tail": "rest", "split": "test", "polarity": "logical", "source_head": "PersonX eats", "cue": "not"}
)");
  CHECK_THROWS_AS(load_kg(in, KgFormat::kJsonl), DataError);
}

TEST_CASE("patterned sentences follow the per-relation templates") {
  CHECK(render_patterned_sentence("PersonX addresses a talk", RelationType::kXWant,
                                  "to convince others") ==
        "PersonX addresses a talk. As a result, PersonX wants to convince others.");
  CHECK(render_patterned_sentence("PersonX has a nightmare", RelationType::kXNeed, "to sleep") ==
        "PersonX has a nightmare. Before, PersonX needed to sleep.");
  CHECK(render_patterned_sentence("X wears a mask", RelationType::kXAttr, "responsible") ==
        "X wears a mask. PersonX is seen as responsible.");
  // Head periods never double up.
  CHECK(render_patterned_sentence("X wears a mask.", RelationType::kXAttr, "responsible") ==
        "X wears a mask. PersonX is seen as responsible.");
}

TEST_CASE("patterned rendering is injective per relation") {
  std::mt19937_64 rng(5);
  const char* words[] = {"alpha", "beta", "gamma", "delta"};
  for (RelationType r : all_relations()) {
    std::map<std::string, std::pair<std::string, std::string>> seen;
    for (int trial = 0; trial < 100; ++trial) {
      std::string head = std::string("PersonX ") + words[rng() % 4] + " " + words[rng() % 4];
      std::string tail = std::string(words[rng() % 4]) + " " + words[rng() % 4];
      const std::string sentence = render_patterned_sentence(head, r, tail);
      const auto key = std::pair{normalize_text(head), normalize_text(tail)};
      auto [it, inserted] = seen.try_emplace(sentence, key);
      if (!inserted) CHECK(it->second == key);
    }
  }
}

TEST_SUITE_END();
