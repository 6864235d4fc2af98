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

#include <map>
#include <sstream>

#include "anionforge/error.hpp"
#include "anionforge/negation.hpp"
#include "anionforge/text.hpp"
#include "doctest.h"

using namespace anionforge;

namespace {

const CueLexiconEntry& cue_entry(const std::string& cue) {
  for (const CueLexiconEntry& e : default_cue_lexicon()) {
    if (e.cue == cue) return e;
  }
  FAIL("cue not in default lexicon: ", cue);
  static CueLexiconEntry dummy;
  return dummy;
}

NegationResult negate_with(const std::string& text, const std::string& cue,
                           NegationOptions options = {}) {
  return cue == "not" ? negate_logical(text, options)
                      : negate_semilogical(text, cue_entry(cue), options);
}

std::multiset<std::string> token_multiset(const std::vector<std::string>& tokens) {
  return {tokens.begin(), tokens.end()};
}

}  // namespace

TEST_SUITE_BEGIN("negation");

TEST_CASE("logical insertion with do-support") {
  CHECK(negate_logical("X plays the piano").event.text == "X does not play the piano");
  CHECK(negate_logical("PersonX buys some shoes").event.text ==
        "PersonX does not buy any shoes");
  NegationOptions contracted;
  contracted.contractions = true;
  CHECK(negate_logical("PersonX buys some shoes", contracted).event.text ==
        "PersonX doesn't buy any shoes");
  CHECK(negate_logical("X went to a movie").event.text == "X did not go to a movie");
  CHECK(negate_logical("X and Y play chess").event.text == "X and Y do not play chess");
  CHECK(negate_logical("X is happy").event.text == "X is not happy");
  CHECK(negate_logical("X was happy").event.text == "X was not happy");
  CHECK(negate_logical("X will go home").event.text == "X will not go home");
  CHECK(negate_logical("X can swim").event.text == "X cannot swim");
  CHECK(negate_logical("X has eaten the cake").event.text == "X has not eaten the cake");
}

TEST_CASE("logical negation result metadata") {
  const NegationResult r = negate_logical("X plays the piano");
  CHECK(r.event.polarity == Polarity::kLogical);
  CHECK(r.event.source_head == "X plays the piano");
  CHECK(r.event.cue == "not");
  CHECK(r.applied_cue == "not");
  CHECK_FALSE(r.rule_trace.empty());
}

TEST_CASE("logical rejections") {
  CHECK_THROWS_AS(negate_logical("X went to a movie because Y asked"), NegationError);
  try {
    negate_logical("X went to a movie because Y asked");
  } catch (const NegationError& e) {
    CHECK(e.reason() == NegationReason::kCompoundEventRejected);
  }
  try {
    negate_logical("X does not play the piano");
  } catch (const NegationError& e) {
    CHECK(e.reason() == NegationReason::kAlreadyNegated);
  }
  try {
    negate_logical("piano the plays");
  } catch (const NegationError& e) {
    CHECK(e.reason() == NegationReason::kUnparsableEvent);
  }
}

// Every fixture: (affirmative with the cue stripped, cue, published sentence).
struct GoldenRow {
  const char* affirmative;
  const char* cue;
  const char* expected;
};

const GoldenRow kGoldenCorpus[] = {
    // Affix cues.
    {"X addresses a relevant point", "ir-", "X addresses an irrelevant point"},
    {"X is likely to be a spy", "un-", "X is unlikely to be a spy"},
    {"X saddles the horse", "un-", "X unsaddles the horse"},
    // Single-word cues.
    {"X tells the truth to the public", "not", "X does not tell the truth to the public"},
    {"X eats ice cream", "never", "X never eats ice cream"},
    {"X went to a movie with his friends", "without", "X went to a movie without his friends"},
    // Multi-word cues.
    {"X wants to buy a car", "no longer", "X no longer wants to buy a car"},
    {"X is impressed by Y's ideas", "not at all", "X is not at all impressed by Y's ideas"},
    {"X smokes", "under no circumstances", "X under no circumstances smokes"},
    {"X is cheating on Y", "by no means", "X is by no means cheating on Y"},
    // Negative verbs.
    {"X skates around", "avoid", "X avoids skating around"},
    {"X is in a relationship", "refuse", "X refuses to be in a relationship"},
    {"X eats with Y", "restrain himself from", "X restrains himself from eating with Y"},
    // Body-text examples.
    {"X plays the piano", "not", "X does not play the piano"},
    {"PersonX buys some shoes", "not", "PersonX does not buy any shoes"},
};

TEST_CASE("golden corpus round trip") {
  for (const GoldenRow& row : kGoldenCorpus) {
    CAPTURE(row.affirmative);
    CHECK(negate_with(row.affirmative, row.cue).event.text == row.expected);
  }
}

TEST_CASE("semi-logical metadata and traces") {
  const NegationResult r = negate_semilogical("X eats ice cream", cue_entry("never"));
  CHECK(r.event.polarity == Polarity::kSemiLogical);
  CHECK(r.event.cue == "never");
  CHECK(r.event.source_head == "X eats ice cream");

  // Frame property: output tokens = input tokens - removed + added.
  std::multiset<std::string> expected = token_multiset(split_ws("X eats ice cream"));
  for (const RewriteStep& step : r.rule_trace) {
    for (const std::string& t : step.removed) {
      auto it = expected.find(t);
      REQUIRE(it != expected.end());
      expected.erase(it);
    }
    for (const std::string& t : step.added) expected.insert(t);
  }
  CHECK(expected == token_multiset(split_ws(r.event.text)));
}

TEST_CASE("frame property across many rewrites") {
  const char* inputs[] = {
      "X plays the piano", "X went to a movie", "X is happy",
      "PersonX buys some shoes", "X and Y play chess", "X has eaten the cake",
  };
  for (const char* input : inputs) {
    for (const char* cue : {"not", "never", "no longer", "rarely"}) {
      CAPTURE(input);
      CAPTURE(cue);
      NegationResult r;
      try {
        r = negate_with(input, cue);
      } catch (const NegationError&) {
        continue;
      }
      std::multiset<std::string> expected = token_multiset(split_ws(input));
      for (const RewriteStep& step : r.rule_trace) {
        for (const std::string& t : step.removed) {
          auto it = expected.find(t);
          REQUIRE(it != expected.end());
          expected.erase(it);
        }
        for (const std::string& t : step.added) expected.insert(t);
      }
      CHECK(expected == token_multiset(split_ws(r.event.text)));
    }
  }
}

TEST_CASE("double negation always rejects") {
  for (const GoldenRow& row : kGoldenCorpus) {
    for (const CueLexiconEntry& cue : default_cue_lexicon()) {
      CAPTURE(row.expected);
      CAPTURE(cue.cue);
      CHECK_THROWS_AS(negate_with(row.expected, cue.cue), NegationError);
      try {
        negate_with(row.expected, cue.cue);
      } catch (const NegationError& e) {
        CHECK(e.reason() == NegationReason::kAlreadyNegated);
      }
    }
  }
}

TEST_CASE("logical output has exactly one not and one auxiliary after the subject") {
  const std::set<std::string> auxiliaries = {
      "do",  "does", "did",   "is",     "was",  "are", "were", "can",
      "could", "would", "should", "may", "might", "will", "must", "has",
      "have", "had", "cannot",
  };
  const char* inputs[] = {
      "X plays the piano",      "X went to a movie",     "X is happy",
      "PersonX buys some shoes", "X and Y play chess",   "X has eaten the cake",
      "X will go home",          "X can swim",           "PersonX's dog barks",
      "X tells the truth to the public",
  };
  for (const char* input : inputs) {
    CAPTURE(input);
    const NegationResult r = negate_logical(input);
    const ParseSketch sketch = parse_sketch(input);
    const std::vector<std::string> out = split_ws(r.event.text);

    int nots = 0;
    int auxes = 0;
    std::size_t aux_pos = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::string lowered = to_lower(out[i]);
      if (lowered == "not" || lowered == "cannot") ++nots;
      if (auxiliaries.contains(lowered) && lowered != "not") {
        ++auxes;
        aux_pos = i;
      }
    }
    CHECK(nots == 1);  // "cannot" fuses both and counts once
    CHECK(auxes == 1);
    // The auxiliary sits right after the subject span.
    CHECK(aux_pos == sketch.subject_end);
  }
}

TEST_CASE("cue incompatibility") {
  try {
    negate_semilogical("X plays the piano", cue_entry("un-"));
    FAIL("expected CueIncompatible");
  } catch (const NegationError& e) {
    CHECK(e.reason() == NegationReason::kCueIncompatible);
  }
}

TEST_CASE("cue lexicon TSV round trip and shipped file sync") {
  std::ostringstream out;
  save_cue_lexicon(default_cue_lexicon(), out);
  const std::string tsv = out.str();
  const std::string path = std::string(ANIONFORGE_DATA_DIR) + "/cues.tsv";
  CHECK(load_cue_lexicon(path) == default_cue_lexicon());
}

TEST_CASE("batch negate is deterministic and reports rejections") {
  KnowledgeGraph graph;
  Event simple;
  simple.text = "PersonX plays the piano";
  graph.add({simple, RelationType::kXWant, "to practice"});
  Event compound;
  compound.text = "PersonX sings because PersonY listens";
  graph.add({compound, RelationType::kXWant, "to perform"});

  const std::vector<CueLexiconEntry> cues = {cue_entry("never")};
  BatchNegateReport report;
  const auto results = batch_negate(graph, cues, 7, {}, &report);
  REQUIRE(results.size() == 1);
  CHECK(results[0].event.text == "PersonX never plays the piano");
  CHECK(results[0].event.split == Split::kTrain);
  CHECK(report.produced.at("never") == 1);
  CHECK(report.rejections.at("never").at("CompoundEventRejected") == 1);

  // Same inputs, same seed: byte-identical output.
  const auto again = batch_negate(graph, cues, 7, {}, nullptr);
  REQUIRE(again.size() == results.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].event.text == results[i].event.text);
  }

  // Sampling caps per-cue output deterministically.
  KnowledgeGraph bigger = graph;
  for (int i = 0; i < 20; ++i) {
    Event e;
    e.text = "PersonX visits the museum " + std::to_string(i);
    bigger.add({e, RelationType::kXWant, "to learn"});
  }
  BatchNegateOptions options;
  options.sample_per_cue = 5;
  const auto sampled = batch_negate(bigger, cues, 3, options, nullptr);
  CHECK(sampled.size() == 5);
  const auto sampled_again = batch_negate(bigger, cues, 3, options, nullptr);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    CHECK(sampled[i].event.text == sampled_again[i].event.text);
  }
}

TEST_SUITE_END();
