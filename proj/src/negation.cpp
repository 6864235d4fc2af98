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

#include "anionforge/negation.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "anionforge/error.hpp"
#include "anionforge/io.hpp"
#include "anionforge/stats.hpp"
#include "anionforge/text.hpp"

namespace anionforge {

namespace {

const std::set<std::string>& determiners() {
  static const std::set<std::string> words = {
      "the", "a", "an", "his", "her", "their", "its", "my", "our", "your",
      "this", "that", "these", "those", "some", "any", "every", "each",
  };
  return words;
}

const std::set<std::string>& pre_verb_adverbs() {
  static const std::set<std::string> words = {
      "often", "always", "usually", "sometimes", "frequently", "constantly", "regularly",
      "secretly", "suddenly", "quietly", "quickly", "slowly", "carefully", "finally",
      "happily", "eagerly", "gladly", "reluctantly", "intentionally", "accidentally",
      "deliberately", "really", "just",
  };
  return words;
}

const std::set<std::string>& modals() {
  static const std::set<std::string> words = {
      "will", "would", "can", "could", "shall", "should", "may", "might", "must",
  };
  return words;
}

bool is_copula(std::string_view t, Tense* tense) {
  if (t == "is" || t == "are" || t == "am") {
    *tense = Tense::kCopulaPresent;
    return true;
  }
  if (t == "was" || t == "were") {
    *tense = Tense::kCopulaPast;
    return true;
  }
  return false;
}

bool is_possessive(std::string_view t) {
  return t.size() > 2 && t.substr(t.size() - 2) == "'s";
}

struct ClauseMarkers {
  static const std::set<std::string>& words() {
    static const std::set<std::string> w = {
        "that", "because", "while", "when", "who", "which", "after", "before", "and", "but",
    };
    return w;
  }
};

bool has_reading(const std::vector<VerbReading>& readings, VerbForm form) {
  return std::any_of(readings.begin(), readings.end(),
                     [&](const VerbReading& r) { return r.form == form; });
}

std::string reading_base(const std::vector<VerbReading>& readings, VerbForm form) {
  for (const VerbReading& r : readings) {
    if (r.form == form) return r.base;
  }
  return {};
}

// Finite readings only; participles and gerunds cannot head the clause.
bool is_finite_verb(const VerbLexicon& lex, std::string_view surface) {
  const auto readings = lex.readings(surface);
  return has_reading(readings, VerbForm::kBase) || has_reading(readings, VerbForm::kThirdSingular) ||
         has_reading(readings, VerbForm::kPast);
}

}  // namespace

ParseSketch parse_sketch(std::string_view text) {
  const VerbLexicon& lex = VerbLexicon::shipped();
  ParseSketch sketch;
  sketch.tokens = split_ws(text);
  if (sketch.tokens.empty()) {
    throw NegationError(NegationReason::kUnparsableEvent, "empty event");
  }

  // Detach terminal sentence punctuation from the last token.
  std::string& last = sketch.tokens.back();
  while (!last.empty() && (last.back() == '.' || last.back() == '!' || last.back() == '?')) {
    sketch.terminal_punct.insert(sketch.terminal_punct.begin(), last.back());
    last.pop_back();
  }
  if (last.empty()) {
    sketch.tokens.pop_back();
    if (sketch.tokens.empty()) {
      throw NegationError(NegationReason::kUnparsableEvent, "empty event");
    }
  }

  const auto& toks = sketch.tokens;
  std::vector<std::string> low;
  low.reserve(toks.size());
  for (const auto& t : toks) low.push_back(to_lower(t));

  // Subject: leading PersonX / X, "PersonX and PersonY", or "PersonX's <noun>".
  std::size_t subject_pattern_end = 0;
  const bool person0 = low[0] == "personx" || low[0] == "x" || low[0] == "persony" ||
                       low[0] == "y";
  const bool possessive0 = low[0] == "personx's" || low[0] == "x's";
  if (person0) {
    if (toks.size() >= 3 && low[1] == "and" &&
        (low[2] == "persony" || low[2] == "y" || low[2] == "personz" || low[2] == "z" ||
         low[2] == "personx" || low[2] == "x")) {
      subject_pattern_end = 3;
      sketch.subject_plural = true;
    } else {
      subject_pattern_end = 1;
    }
  } else if (possessive0) {
    subject_pattern_end = 1;  // the possessed noun joins the span via the verb scan
  } else {
    throw NegationError(NegationReason::kUnparsableEvent,
                        "no subject found in \"" + std::string(text) + "\"");
  }

  // Leftmost finite verb after the subject pattern; tokens in determiner or
  // possessive context read as nouns.
  std::size_t verb_index = 0;
  bool found = false;
  bool det_context = false;
  for (std::size_t i = subject_pattern_end; i < toks.size(); ++i) {
    const std::string& t = low[i];
    if (det_context) {
      det_context = determiners().contains(t) || is_possessive(t);
      continue;
    }
    if (determiners().contains(t) || is_possessive(t)) {
      det_context = true;
      continue;
    }
    Tense copula_tense;
    if (modals().contains(t) || is_copula(t, &copula_tense) || is_finite_verb(lex, t) ||
        ((t == "has" || t == "have" || t == "had") && i + 1 < toks.size())) {
      if (lex.noun_after_determiner(t) && i > 0 &&
          (determiners().contains(low[i - 1]) || is_possessive(low[i - 1]))) {
        continue;
      }
      verb_index = i;
      found = true;
      break;
    }
  }
  if (!found) {
    throw NegationError(NegationReason::kUnparsableEvent,
                        "no main verb found in \"" + std::string(text) + "\"");
  }

  // Classify the hit: modal/copula/perfect auxiliary vs plain finite verb.
  const std::string& v = low[verb_index];
  Tense copula_tense;
  if (modals().contains(v)) {
    sketch.aux_index = verb_index;
    sketch.tense = (v == "will" || v == "shall") ? Tense::kFuture : Tense::kModal;
    // The verb the modal scopes over, if present.
    std::size_t j = verb_index + 1;
    while (j < toks.size() && pre_verb_adverbs().contains(low[j])) ++j;
    if (j < toks.size() && (is_finite_verb(lex, low[j]) || low[j] == "be")) {
      sketch.main_verb = j;
    } else {
      sketch.main_verb = verb_index;
    }
  } else if (is_copula(v, &copula_tense)) {
    sketch.main_verb = verb_index;
    sketch.tense = copula_tense;
  } else if ((v == "has" || v == "have" || v == "had") && verb_index + 1 < toks.size() &&
             has_reading(lex.readings(low[verb_index + 1]), VerbForm::kPastParticiple)) {
    // Perfect: the auxiliary carries the negation, like a modal.
    sketch.aux_index = verb_index;
    sketch.main_verb = verb_index + 1;
    sketch.tense = Tense::kModal;
  } else {
    sketch.main_verb = verb_index;
    const auto readings = lex.readings(v);
    const bool third = has_reading(readings, VerbForm::kThirdSingular);
    const bool past = has_reading(readings, VerbForm::kPast);
    const bool base = has_reading(readings, VerbForm::kBase);
    if (third) {
      sketch.tense = Tense::kPresent3sg;
    } else if (past && base) {
      // "put"-style ambiguity: a bare form with a singular subject cannot be
      // 3sg present, so read it as past; with a plural subject prefer the
      // habitual present common in this corpus.
      sketch.tense = sketch.subject_plural ? Tense::kPresentPlain : Tense::kPast;
    } else if (past) {
      sketch.tense = Tense::kPast;
    } else {
      sketch.tense = Tense::kPresentPlain;
    }
  }

  // Subject span ends where the auxiliary/verb phrase starts, hopping back
  // over pre-verb adverbs.
  std::size_t phrase_start = sketch.aux_index.value_or(sketch.main_verb);
  while (phrase_start > subject_pattern_end &&
         pre_verb_adverbs().contains(low[phrase_start - 1])) {
    --phrase_start;
  }
  sketch.subject_begin = 0;
  sketch.subject_end = std::max(phrase_start, subject_pattern_end);

  // Clause marker introducing a second predicate.
  for (std::size_t i = subject_pattern_end; i < toks.size(); ++i) {
    if (i == sketch.main_verb || !ClauseMarkers::words().contains(low[i])) continue;
    // A marker that doubles as a determiner ("that car") opens noun context.
    bool det = determiners().contains(low[i]);
    for (std::size_t j = i + 1; j < toks.size(); ++j) {
      if (det) {
        det = determiners().contains(low[j]) || is_possessive(low[j]);
        continue;
      }
      if (determiners().contains(low[j]) || is_possessive(low[j])) {
        det = true;
        continue;
      }
      if (j != sketch.main_verb &&
          (is_finite_verb(lex, low[j]) ||
           (is_copula(low[j], &copula_tense) && j != sketch.main_verb))) {
        sketch.has_clause_marker = true;
        break;
      }
    }
    if (sketch.has_clause_marker) break;
  }

  // Coarse tags.
  sketch.tags.assign(toks.size(), TokenTag::kOther);
  for (std::size_t i = 0; i < sketch.subject_end; ++i) sketch.tags[i] = TokenTag::kSubj;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (determiners().contains(low[i])) sketch.tags[i] = TokenTag::kDet;
  }
  if (sketch.aux_index) sketch.tags[*sketch.aux_index] = TokenTag::kModal;
  sketch.tags[sketch.main_verb] = TokenTag::kVerb;
  return sketch;
}

namespace {

// ---------------------------------------------------------------------------
// Cue lexicon
// ---------------------------------------------------------------------------

const char* cue_category_name(CueCategory c) {
  switch (c) {
    case CueCategory::kAffix: return "affix";
    case CueCategory::kSingleWord: return "single_word";
    case CueCategory::kMultiWord: return "multi_word";
    case CueCategory::kNegativeVerb: return "negative_verb";
  }
  return "single_word";
}

const char* insertion_rule_name(InsertionRule r) {
  switch (r) {
    case InsertionRule::kAfterSubject: return "after_subject";
    case InsertionRule::kBeforeMainVerb: return "before_main_verb";
    case InsertionRule::kReplaceVerbWithGerundComplement:
      return "replace_verb_with_gerund_complement";
    case InsertionRule::kPrefixOrSuffixOnContentWord:
      return "prefix_or_suffix_on_content_word";
  }
  return "after_subject";
}

enum class ComplementKind { kGerund, kInfinitive, kBare };

// Complement taken by each shipped negative-verb cue.
const std::map<std::string, ComplementKind>& complement_kinds() {
  static const std::map<std::string, ComplementKind> kinds = {
      {"avoid", ComplementKind::kGerund},
      {"stop", ComplementKind::kGerund},
      {"quit", ComplementKind::kGerund},
      {"resist", ComplementKind::kGerund},
      {"cease", ComplementKind::kGerund},
      {"discontinue", ComplementKind::kGerund},
      {"oppose", ComplementKind::kGerund},
      {"disapprove of", ComplementKind::kGerund},
      {"restrain himself from", ComplementKind::kGerund},
      {"refuse", ComplementKind::kInfinitive},
      {"fail", ComplementKind::kInfinitive},
      {"decline", ComplementKind::kInfinitive},
      {"neglect", ComplementKind::kInfinitive},
      {"make no attempt to", ComplementKind::kBare},
  };
  return kinds;
}

// Whitelisted affixation targets per affix cue. Productive affixation is
// unsafe by rule, so only mapped words are rewritten.
const std::map<std::string, std::map<std::string, std::string>>& affix_maps() {
  static const std::map<std::string, std::map<std::string, std::string>> maps = {
      {"un-",
       {
           {"likely", "unlikely"},     {"happy", "unhappy"},
           {"able", "unable"},         {"aware", "unaware"},
           {"willing", "unwilling"},   {"comfortable", "uncomfortable"},
           {"certain", "uncertain"},   {"sure", "unsure"},
           {"healthy", "unhealthy"},   {"safe", "unsafe"},
           {"lucky", "unlucky"},       {"fair", "unfair"},
           {"friendly", "unfriendly"}, {"popular", "unpopular"},
           {"prepared", "unprepared"}, {"employed", "unemployed"},
           {"usual", "unusual"},       {"pleasant", "unpleasant"},
           {"kind", "unkind"},         {"tidy", "untidy"},
           {"grateful", "ungrateful"}, {"successful", "unsuccessful"},
           {"reliable", "unreliable"}, {"saddle", "unsaddle"},
           {"lock", "unlock"},         {"pack", "unpack"},
           {"load", "unload"},         {"dress", "undress"},
           {"tie", "untie"},           {"fold", "unfold"},
           {"plug", "unplug"},         {"cover", "uncover"},
           {"wrap", "unwrap"},
       }},
      {"ir-",
       {
           {"relevant", "irrelevant"},       {"responsible", "irresponsible"},
           {"regular", "irregular"},         {"rational", "irrational"},
           {"replaceable", "irreplaceable"}, {"resistible", "irresistible"},
       }},
      {"non-",
       {
           {"essential", "nonessential"},   {"refundable", "nonrefundable"},
           {"negotiable", "nonnegotiable"}, {"violent", "nonviolent"},
       }},
      {"il-",
       {
           {"legal", "illegal"},
           {"logical", "illogical"},
           {"literate", "illiterate"},
           {"legible", "illegible"},
       }},
      {"im-",
       {
           {"possible", "impossible"}, {"patient", "impatient"},
           {"polite", "impolite"},     {"mature", "immature"},
           {"perfect", "imperfect"},   {"practical", "impractical"},
           {"probable", "improbable"}, {"proper", "improper"},
       }},
      {"-less",
       {
           {"harm", "harmless"},   {"use", "useless"},   {"help", "helpless"},
           {"home", "homeless"},   {"hope", "hopeless"}, {"fear", "fearless"},
           {"pain", "painless"},   {"end", "endless"},   {"power", "powerless"},
           {"worth", "worthless"}, {"care", "careless"}, {"thought", "thoughtless"},
       }},
      {"without",
       {
           {"with", "without"},
       }},
  };
  return maps;
}

// Guard words that mark an event as already negated beyond the insertable
// lexicon itself.
const std::vector<std::vector<std::string>>& guard_sequences() {
  static const std::vector<std::vector<std::string>> sequences = [] {
    std::vector<std::vector<std::string>> seqs;
    for (const CueLexiconEntry& e : default_cue_lexicon()) {
      if (e.category == CueCategory::kAffix) continue;  // handled via word forms
      seqs.push_back(split_ws(to_lower(e.cue)));
    }
    for (const char* w :
         {"no", "nothing", "nobody", "none", "cannot", "scarcely", "seldom", "few",
          "little", "neither", "nor", "lack", "lacks", "lacked", "prohibit", "prohibits",
          "prohibited", "prevent", "prevents", "prevented", "reject", "rejects", "rejected",
          "deny", "denies", "denied", "forbid", "forbids", "forbade", "halt", "halts",
          "halted"}) {
      seqs.push_back({w});
    }
    return seqs;
  }();
  return sequences;
}

// Affixed word forms (plus verb inflections of affixed verb bases).
const std::set<std::string>& guard_affixed_forms() {
  static const std::set<std::string> forms = [] {
    std::set<std::string> out;
    const VerbLexicon& lex = VerbLexicon::shipped();
    for (const auto& [cue, mapping] : affix_maps()) {
      for (const auto& [word, affixed] : mapping) {
        out.insert(affixed);
        if (lex.known_base(affixed)) {
          for (VerbForm form : {VerbForm::kThirdSingular, VerbForm::kPast,
                                VerbForm::kPastParticiple, VerbForm::kGerund}) {
            if (auto inflected = lex.inflect(affixed, form)) out.insert(*inflected);
          }
        }
      }
    }
    return out;
  }();
  return forms;
}

// Inflections of negative-verb cue heads, shipped or guard-only.
const std::set<std::string>& guard_negative_verb_forms() {
  static const std::set<std::string> forms = [] {
    std::set<std::string> out;
    const VerbLexicon& lex = VerbLexicon::shipped();
    std::vector<std::string> heads;
    for (const CueLexiconEntry& e : default_cue_lexicon()) {
      if (e.category == CueCategory::kNegativeVerb) heads.push_back(split_ws(e.cue).front());
    }
    for (const std::string& base : heads) {
      out.insert(base);
      for (VerbForm form : {VerbForm::kThirdSingular, VerbForm::kPast,
                            VerbForm::kPastParticiple, VerbForm::kGerund}) {
        if (auto inflected = lex.inflect(base, form)) out.insert(*inflected);
      }
    }
    return out;
  }();
  return forms;
}

bool contains_sequence(const std::vector<std::string>& tokens,
                       const std::vector<std::string>& seq) {
  if (seq.empty() || seq.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + seq.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (tokens[i + j] != seq[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

std::string to_string(CueCategory c) { return cue_category_name(c); }

CueCategory parse_cue_category(std::string_view name) {
  for (CueCategory c : {CueCategory::kAffix, CueCategory::kSingleWord, CueCategory::kMultiWord,
                        CueCategory::kNegativeVerb}) {
    if (name == cue_category_name(c)) return c;
  }
  throw FormatError("unknown cue category: \"" + std::string(name) + "\"");
}

std::string to_string(InsertionRule r) { return insertion_rule_name(r); }

InsertionRule parse_insertion_rule(std::string_view name) {
  for (InsertionRule r :
       {InsertionRule::kAfterSubject, InsertionRule::kBeforeMainVerb,
        InsertionRule::kReplaceVerbWithGerundComplement,
        InsertionRule::kPrefixOrSuffixOnContentWord}) {
    if (name == insertion_rule_name(r)) return r;
  }
  throw FormatError("unknown insertion rule: \"" + std::string(name) + "\"");
}

const std::vector<CueLexiconEntry>& default_cue_lexicon() {
  static const std::vector<CueLexiconEntry> cues = {
      {"not", CueCategory::kSingleWord, InsertionRule::kAfterSubject},
      {"never", CueCategory::kSingleWord, InsertionRule::kBeforeMainVerb},
      {"hardly", CueCategory::kSingleWord, InsertionRule::kBeforeMainVerb},
      {"rarely", CueCategory::kSingleWord, InsertionRule::kBeforeMainVerb},
      {"barely", CueCategory::kSingleWord, InsertionRule::kBeforeMainVerb},
      {"seldomly", CueCategory::kSingleWord, InsertionRule::kBeforeMainVerb},
      {"without", CueCategory::kSingleWord, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"no longer", CueCategory::kMultiWord, InsertionRule::kAfterSubject},
      {"not at all", CueCategory::kMultiWord, InsertionRule::kAfterSubject},
      {"by no means", CueCategory::kMultiWord, InsertionRule::kAfterSubject},
      {"under no circumstances", CueCategory::kMultiWord, InsertionRule::kAfterSubject},
      {"on no condition", CueCategory::kMultiWord, InsertionRule::kAfterSubject},
      {"hardly ever", CueCategory::kMultiWord, InsertionRule::kBeforeMainVerb},
      {"barely ever", CueCategory::kMultiWord, InsertionRule::kBeforeMainVerb},
      {"make no attempt to", CueCategory::kMultiWord,
       InsertionRule::kReplaceVerbWithGerundComplement},
      {"un-", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"ir-", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"non-", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"il-", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"im-", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"-less", CueCategory::kAffix, InsertionRule::kPrefixOrSuffixOnContentWord},
      {"oppose", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"refuse", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"resist", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"avoid", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"disapprove of", CueCategory::kNegativeVerb,
       InsertionRule::kReplaceVerbWithGerundComplement},
      {"stop", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"cease", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"discontinue", CueCategory::kNegativeVerb,
       InsertionRule::kReplaceVerbWithGerundComplement},
      {"fail", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"quit", CueCategory::kNegativeVerb, InsertionRule::kReplaceVerbWithGerundComplement},
      {"restrain himself from", CueCategory::kNegativeVerb,
       InsertionRule::kReplaceVerbWithGerundComplement},
  };
  return cues;
}

std::vector<CueLexiconEntry> load_cue_lexicon(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<CueLexiconEntry> cues;
  std::string line;
  std::int64_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_tsv_row(line, line_no);
    if (!saw_header) {
      if (fields.size() != 3 || fields[0] != "cue") {
        throw FormatError("cue lexicon must start with header cue\\tcategory\\tinsertion_rule",
                          line_no);
      }
      saw_header = true;
      continue;
    }
    if (fields.size() != 3) throw FormatError("expected 3 TSV columns", line_no);
    if (fields[0].empty()) throw FormatError("empty cue", line_no);
    cues.push_back(CueLexiconEntry{fields[0], parse_cue_category(fields[1]),
                                   parse_insertion_rule(fields[2])});
  }
  if (cues.empty()) throw DataError("cue lexicon is empty: " + path);
  return cues;
}

void save_cue_lexicon(const std::vector<CueLexiconEntry>& cues, std::ostream& out) {
  out << "cue\tcategory\tinsertion_rule\n";
  for (const CueLexiconEntry& e : cues) {
    out << tsv_escape(e.cue) << '\t' << to_string(e.category) << '\t' << to_string(e.rule)
        << '\n';
  }
}

bool contains_negation_cue(std::string_view text) {
  std::vector<std::string> tokens;
  for (const std::string& t : split_ws(text)) {
    std::string lowered = to_lower(t);
    while (!lowered.empty() &&
           (lowered.back() == '.' || lowered.back() == '!' || lowered.back() == '?' ||
            lowered.back() == ',')) {
      lowered.pop_back();
    }
    tokens.push_back(std::move(lowered));
  }
  for (const std::string& t : tokens) {
    if (t.size() > 3 && t.substr(t.size() - 3) == "n't") return true;
    if (guard_affixed_forms().contains(t)) return true;
    if (guard_negative_verb_forms().contains(t)) return true;
  }
  for (const auto& seq : guard_sequences()) {
    if (contains_sequence(tokens, seq)) return true;
  }
  return false;
}

namespace {

// ---------------------------------------------------------------------------
// Rewrite machinery
// ---------------------------------------------------------------------------

struct Rewriter {
  std::vector<std::string> tokens;
  std::vector<RewriteStep> trace;

  void insert(std::size_t pos, std::vector<std::string> words, const std::string& op) {
    trace.push_back(RewriteStep{op, pos, {}, words});
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                  std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  }

  void replace(std::size_t pos, std::size_t count, std::vector<std::string> words,
               const std::string& op) {
    std::vector<std::string> removed(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                                     tokens.begin() + static_cast<std::ptrdiff_t>(pos + count));
    trace.push_back(RewriteStep{op, pos, std::move(removed), words});
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                 tokens.begin() + static_cast<std::ptrdiff_t>(pos + count));
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                  std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  }
};

const std::map<std::string, std::string>& contraction_map() {
  static const std::map<std::string, std::string> map = {
      {"do", "don't"},       {"does", "doesn't"},   {"did", "didn't"},
      {"is", "isn't"},       {"are", "aren't"},     {"was", "wasn't"},
      {"were", "weren't"},   {"has", "hasn't"},     {"have", "haven't"},
      {"had", "hadn't"},     {"will", "won't"},     {"would", "wouldn't"},
      {"should", "shouldn't"}, {"could", "couldn't"}, {"can", "can't"},
      {"must", "mustn't"},
  };
  return map;
}

void apply_contraction(Rewriter& rw, std::size_t aux_pos) {
  if (aux_pos + 1 >= rw.tokens.size() || rw.tokens[aux_pos + 1] != "not") return;
  auto it = contraction_map().find(to_lower(rw.tokens[aux_pos]));
  if (it == contraction_map().end()) return;
  rw.replace(aux_pos, 2, {it->second}, "contract");
}

void replace_some_with_any(Rewriter& rw, std::size_t from) {
  for (std::size_t i = from; i < rw.tokens.size(); ++i) {
    if (to_lower(rw.tokens[i]) == "some") {
      rw.replace(i, 1, {"any"}, "some_to_any");
    }
  }
}

void check_preconditions(std::string_view text, const ParseSketch& sketch) {
  if (sketch.has_clause_marker) {
    throw NegationError(NegationReason::kCompoundEventRejected,
                        "compound event: \"" + std::string(text) + "\"");
  }
}

Event make_derived_event(std::string_view source, std::string output, Polarity polarity,
                         const std::string& cue) {
  Event e;
  e.text = std::move(output);
  e.polarity = polarity;
  e.source_head = std::string(source);
  e.cue = cue;
  return e;
}

std::string rebuild(const Rewriter& rw, const ParseSketch& sketch) {
  std::string out = join(rw.tokens);
  out += sketch.terminal_punct;
  return out;
}

// Adverbial insertion point: after a copula or auxiliary when one heads the
// verb phrase, otherwise directly after the subject span.
std::size_t adverbial_position(const ParseSketch& sketch) {
  if (sketch.aux_index) return *sketch.aux_index + 1;
  if (sketch.tense == Tense::kCopulaPresent || sketch.tense == Tense::kCopulaPast) {
    return sketch.main_verb + 1;
  }
  return sketch.subject_end;
}

void fix_article(Rewriter& rw, std::size_t word_pos) {
  if (word_pos == 0) return;
  const std::string prev = to_lower(rw.tokens[word_pos - 1]);
  if (prev != "a" && prev != "an") return;
  const bool vowel = starts_with_vowel_letter(rw.tokens[word_pos]);
  const std::string wanted = vowel ? "an" : "a";
  if (prev != wanted) {
    // Preserve capitalization of a sentence-initial article; subjects lead
    // these events, so plain lowercase is fine here.
    rw.replace(word_pos - 1, 1, {wanted}, "article");
  }
}

}  // namespace

NegationResult negate_logical(std::string_view text, NegationOptions options) {
  if (contains_negation_cue(text)) {
    throw NegationError(NegationReason::kAlreadyNegated,
                        "event already carries a negation cue: \"" + std::string(text) + "\"");
  }
  const ParseSketch sketch = parse_sketch(text);
  check_preconditions(text, sketch);

  const VerbLexicon& lex = VerbLexicon::shipped();
  Rewriter rw{sketch.tokens, {}};
  // Position of the auxiliary that "not" follows; "cannot" fuses both.
  std::size_t aux_pos = 0;
  bool fused_cannot = false;

  switch (sketch.tense) {
    case Tense::kCopulaPresent:
    case Tense::kCopulaPast:
      aux_pos = sketch.main_verb;
      rw.insert(aux_pos + 1, {"not"}, "insert_not");
      break;
    case Tense::kModal:
    case Tense::kFuture: {
      aux_pos = *sketch.aux_index;
      if (to_lower(rw.tokens[aux_pos]) == "can") {
        rw.replace(aux_pos, 1, {"cannot"}, "insert_not");
        fused_cannot = true;
      } else {
        rw.insert(aux_pos + 1, {"not"}, "insert_not");
      }
      break;
    }
    case Tense::kPresent3sg:
    case Tense::kPresentPlain:
    case Tense::kPast: {
      std::string aux;
      if (sketch.tense == Tense::kPast) {
        aux = "did";
      } else {
        aux = sketch.subject_plural ? "do" : "does";
      }
      const std::string surface = to_lower(rw.tokens[sketch.main_verb]);
      const auto readings = lex.readings(surface);
      std::string base = reading_base(
          readings, sketch.tense == Tense::kPast ? VerbForm::kPast : VerbForm::kThirdSingular);
      if (base.empty()) base = reading_base(readings, VerbForm::kBase);
      if (base.empty()) base = surface;
      if (base != surface) {
        rw.replace(sketch.main_verb, 1, {base}, "verb_to_base");
      }
      aux_pos = sketch.subject_end;
      rw.insert(aux_pos, {aux, "not"}, "insert_not");
      break;
    }
  }

  replace_some_with_any(rw, aux_pos);
  if (options.contractions) {
    if (fused_cannot) {
      rw.replace(aux_pos, 1, {"can't"}, "contract");
    } else {
      apply_contraction(rw, aux_pos);
    }
  }

  NegationResult result;
  result.applied_cue = "not";
  result.rule_trace = std::move(rw.trace);
  result.event = make_derived_event(text, rebuild(rw, sketch), Polarity::kLogical, "not");
  return result;
}

NegationResult negate_semilogical(std::string_view text, const CueLexiconEntry& entry,
                                  NegationOptions options) {
  if (entry.cue == "not") return negate_logical(text, options);
  if (entry.cue.empty()) throw DataError("empty cue");
  if (contains_negation_cue(text)) {
    throw NegationError(NegationReason::kAlreadyNegated,
                        "event already carries a negation cue: \"" + std::string(text) + "\"");
  }
  const ParseSketch sketch = parse_sketch(text);
  check_preconditions(text, sketch);

  const VerbLexicon& lex = VerbLexicon::shipped();
  Rewriter rw{sketch.tokens, {}};

  switch (entry.rule) {
    case InsertionRule::kAfterSubject: {
      rw.insert(adverbial_position(sketch), split_ws(entry.cue), "insert_cue");
      break;
    }
    case InsertionRule::kBeforeMainVerb: {
      std::size_t pos = sketch.main_verb;
      if (sketch.tense == Tense::kCopulaPresent || sketch.tense == Tense::kCopulaPast ||
          sketch.aux_index) {
        pos = adverbial_position(sketch);
      }
      rw.insert(pos, split_ws(entry.cue), "insert_cue");
      break;
    }
    case InsertionRule::kPrefixOrSuffixOnContentWord: {
      auto map_it = affix_maps().find(entry.cue);
      if (map_it == affix_maps().end()) {
        throw NegationError(NegationReason::kCueIncompatible,
                            "no affixation map for cue \"" + entry.cue + "\"");
      }
      const auto& mapping = map_it->second;
      bool applied = false;
      for (std::size_t i = 1; i < rw.tokens.size() && !applied; ++i) {
        const std::string lowered = to_lower(rw.tokens[i]);
        if (auto it = mapping.find(lowered); it != mapping.end()) {
          rw.replace(i, 1, {it->second}, "affix");
          fix_article(rw, i);
          applied = true;
          break;
        }
        if (i == sketch.main_verb) {
          const auto readings = lex.readings(lowered);
          for (const VerbReading& r : readings) {
            auto base_it = mapping.find(r.base);
            if (base_it == mapping.end()) continue;
            auto inflected = lex.inflect(base_it->second, r.form);
            if (!inflected) continue;
            rw.replace(i, 1, {*inflected}, "affix");
            fix_article(rw, i);
            applied = true;
            break;
          }
        }
      }
      if (!applied) {
        throw NegationError(NegationReason::kCueIncompatible,
                            "no affixable word for cue \"" + entry.cue + "\" in \"" +
                                std::string(text) + "\"");
      }
      break;
    }
    case InsertionRule::kReplaceVerbWithGerundComplement: {
      std::vector<std::string> cue_tokens = split_ws(entry.cue);
      const std::string neg_base = to_lower(cue_tokens.front());
      std::vector<std::string> literal(cue_tokens.begin() + 1, cue_tokens.end());
      if (!lex.known_base(neg_base)) {
        throw NegationError(NegationReason::kCueIncompatible,
                            "negative verb \"" + neg_base + "\" not in verb lexicon");
      }
      ComplementKind kind = ComplementKind::kGerund;
      if (auto it = complement_kinds().find(entry.cue); it != complement_kinds().end()) {
        kind = it->second;
      }

      // Complement built from the event's main verb.
      const std::string surface = to_lower(rw.tokens[sketch.main_verb]);
      const bool copula = sketch.tense == Tense::kCopulaPresent ||
                          sketch.tense == Tense::kCopulaPast ||
                          (sketch.aux_index && surface == "be");
      std::string main_base;
      if (copula) {
        main_base = "be";
      } else {
        const auto readings = lex.readings(surface);
        main_base = reading_base(readings, VerbForm::kThirdSingular);
        if (main_base.empty()) main_base = reading_base(readings, VerbForm::kPast);
        if (main_base.empty()) main_base = reading_base(readings, VerbForm::kBase);
        if (main_base.empty()) main_base = reading_base(readings, VerbForm::kPastParticiple);
        if (main_base.empty()) {
          throw NegationError(NegationReason::kCueIncompatible,
                              "main verb \"" + surface + "\" cannot take a complement");
        }
      }
      std::vector<std::string> complement;
      switch (kind) {
        case ComplementKind::kGerund:
          complement = {copula ? "being" : *lex.inflect(main_base, VerbForm::kGerund)};
          break;
        case ComplementKind::kInfinitive:
          complement = {"to", main_base};
          break;
        case ComplementKind::kBare:
          complement = {main_base};
          break;
      }

      // Negative verb picks up the original finite inflection (or rides an
      // auxiliary in base/participle form).
      std::string neg_inflected;
      if (sketch.aux_index) {
        const std::string aux = to_lower(rw.tokens[*sketch.aux_index]);
        const bool perfect = aux == "has" || aux == "have" || aux == "had";
        neg_inflected = perfect ? *lex.inflect(neg_base, VerbForm::kPastParticiple) : neg_base;
      } else {
        switch (sketch.tense) {
          case Tense::kPresent3sg:
          case Tense::kCopulaPresent:
            neg_inflected = sketch.subject_plural
                                ? neg_base
                                : *lex.inflect(neg_base, VerbForm::kThirdSingular);
            break;
          case Tense::kPast:
          case Tense::kCopulaPast:
            neg_inflected = *lex.inflect(neg_base, VerbForm::kPast);
            break;
          default:
            neg_inflected = neg_base;
            break;
        }
      }

      std::vector<std::string> phrase;
      phrase.push_back(neg_inflected);
      phrase.insert(phrase.end(), literal.begin(), literal.end());
      phrase.insert(phrase.end(), complement.begin(), complement.end());
      rw.replace(sketch.main_verb, 1, phrase, "negative_verb");
      break;
    }
  }

  NegationResult result;
  result.applied_cue = entry.cue;
  result.rule_trace = std::move(rw.trace);
  result.event =
      make_derived_event(text, rebuild(rw, sketch), Polarity::kSemiLogical, entry.cue);
  return result;
}

std::vector<NegationResult> batch_negate(const KnowledgeGraph& graph,
                                         const std::vector<CueLexiconEntry>& cues,
                                         std::uint64_t seed, BatchNegateOptions options,
                                         BatchNegateReport* report) {
  BatchNegateReport local;
  std::vector<NegationResult> results;

  std::vector<const Event*> heads;
  for (const Event& e : graph.heads()) {
    if (e.polarity == Polarity::kAffirmative) heads.push_back(&e);
  }
  local.events_considered = static_cast<std::int64_t>(heads.size());

  for (std::size_t ci = 0; ci < cues.size(); ++ci) {
    const CueLexiconEntry& cue = cues[ci];
    std::vector<NegationResult> per_cue;
    for (const Event* head : heads) {
      try {
        NegationResult r = cue.cue == "not"
                               ? negate_logical(head->text, options.negation)
                               : negate_semilogical(head->text, cue, options.negation);
        r.event = graph.assign_split(std::move(r.event));
        per_cue.push_back(std::move(r));
      } catch (const NegationError& e) {
        ++local.rejections[cue.cue][to_string(e.reason())];
      }
    }
    if (options.sample_per_cue > 0 && per_cue.size() > options.sample_per_cue) {
      // Partial Fisher-Yates over indices, then restore input order.
      std::mt19937_64 rng(derive_seed(seed, ci));
      std::vector<std::size_t> idx(per_cue.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      for (std::size_t i = 0; i < options.sample_per_cue; ++i) {
        std::swap(idx[i], idx[i + bounded_rand(rng, idx.size() - i)]);
      }
      idx.resize(options.sample_per_cue);
      std::sort(idx.begin(), idx.end());
      std::vector<NegationResult> sampled;
      sampled.reserve(idx.size());
      for (std::size_t i : idx) sampled.push_back(std::move(per_cue[i]));
      per_cue = std::move(sampled);
    }
    local.produced[cue.cue] = static_cast<std::int64_t>(per_cue.size());
    for (NegationResult& r : per_cue) results.push_back(std::move(r));
  }

  if (report != nullptr) *report = std::move(local);
  return results;
}

}  // namespace anionforge
