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
// Rule-based rewriting of affirmative events into negated events: "not"
// insertion with auxiliary support, and cue-based rewrites (adverbials,
// affixes, negative verbs) driven by a cue lexicon.

#ifndef ANIONFORGE_NEGATION_HPP_
#define ANIONFORGE_NEGATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anionforge/kg.hpp"
#include "anionforge/verbs.hpp"

namespace anionforge {

enum class CueCategory { kAffix, kSingleWord, kMultiWord, kNegativeVerb };
enum class InsertionRule {
  kAfterSubject,
  kBeforeMainVerb,
  kReplaceVerbWithGerundComplement,
  kPrefixOrSuffixOnContentWord,
};

std::string to_string(CueCategory c);
CueCategory parse_cue_category(std::string_view name);
std::string to_string(InsertionRule r);
InsertionRule parse_insertion_rule(std::string_view name);

struct CueLexiconEntry {
  std::string cue;
  CueCategory category = CueCategory::kSingleWord;
  InsertionRule rule = InsertionRule::kAfterSubject;

  friend bool operator==(const CueLexiconEntry&, const CueLexiconEntry&) = default;
};

// The default lexicon shipped with the toolkit (mirrored in data/cues.tsv).
const std::vector<CueLexiconEntry>& default_cue_lexicon();

std::vector<CueLexiconEntry> load_cue_lexicon(const std::string& path);
void save_cue_lexicon(const std::vector<CueLexiconEntry>& cues, std::ostream& out);

// Coarse token tags produced by the sketch parser.
enum class TokenTag { kSubj, kVerb, kModal, kDet, kOther };

enum class Tense {
  kPresent3sg,
  kPresentPlain,
  kPast,
  kModal,
  kCopulaPresent,
  kCopulaPast,
  kFuture,
};

struct ParseSketch {
  std::vector<std::string> tokens;       // surfaces, terminal punctuation stripped
  std::vector<TokenTag> tags;
  std::size_t subject_begin = 0;         // always 0
  std::size_t subject_end = 0;           // one past the subject span
  std::size_t main_verb = 0;             // token index of the main verb
  std::optional<std::size_t> aux_index;  // modal / copula / perfect auxiliary
  Tense tense = Tense::kPresentPlain;
  bool subject_plural = false;
  bool has_clause_marker = false;
  std::string terminal_punct;            // "" or the stripped "."/"!"/"?"
};

// Identifies the subject span ("PersonX", "PersonX's <noun>",
// "PersonX and PersonY"; bare X/Y accepted), the leftmost finite verb, and
// its tense, using the shipped verb lexicon. Throws NegationError
// (kUnparsableEvent) when no subject or no verb is found.
ParseSketch parse_sketch(std::string_view text);

// One token-level rewrite: `removed` tokens at `index` replaced by `added`.
struct RewriteStep {
  std::string op;
  std::size_t index = 0;
  std::vector<std::string> removed;
  std::vector<std::string> added;
};

struct NegationResult {
  Event event;                // polarity logical/semi_logical, source_head = input
  std::string applied_cue;
  std::vector<RewriteStep> rule_trace;
};

struct NegationOptions {
  bool contractions = false;  // "doesn't" instead of "does not"
};

// Inserts "not" with the tense-appropriate auxiliary (do/does/did, copulas,
// modals) and replaces "some" by "any". Rejects compound events and events
// that already carry a negation cue.
NegationResult negate_logical(std::string_view text, NegationOptions options = {});

// Applies a single cue per its insertion rule with verb-form repair.
NegationResult negate_semilogical(std::string_view text, const CueLexiconEntry& entry,
                                  NegationOptions options = {});

// True if the text contains any negation cue (shipped cues, their affixed
// word forms, negative-verb inflections, or bare guard words like "no").
bool contains_negation_cue(std::string_view text);

struct BatchNegateOptions {
  NegationOptions negation;
  // When positive, per-cue results are downsampled to this many (seeded).
  std::size_t sample_per_cue = 0;
};

struct BatchNegateReport {
  // cue -> produced count
  std::map<std::string, std::int64_t> produced;
  // cue -> reason -> count
  std::map<std::string, std::map<std::string, std::int64_t>> rejections;
  std::int64_t events_considered = 0;
};

// Applies every cue in `cues` (the cue "not" routes to negate_logical) to
// each distinct affirmative head of the graph, in deterministic order.
// Derived events inherit the source event's split. Pure in (graph, cues,
// seed, options).
std::vector<NegationResult> batch_negate(const KnowledgeGraph& graph,
                                         const std::vector<CueLexiconEntry>& cues,
                                         std::uint64_t seed,
                                         BatchNegateOptions options = {},
                                         BatchNegateReport* report = nullptr);

}  // namespace anionforge

#endif  // ANIONFORGE_NEGATION_HPP_
