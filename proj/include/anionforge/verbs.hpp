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
// Closed-lexicon verb morphology: a shipped table of base verbs (regular
// inflection rules plus an irregular table) with surface-form lookup. This
// replaces a statistical POS tagger; event grammar here is constrained
// enough ("PersonX <verb phrase>") that a lexicon suffices.

#ifndef ANIONFORGE_VERBS_HPP_
#define ANIONFORGE_VERBS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anionforge {

enum class VerbForm { kBase, kThirdSingular, kPast, kPastParticiple, kGerund };

struct VerbReading {
  std::string base;
  VerbForm form;
};

class VerbLexicon {
 public:
  // The shipped lexicon; built once, immutable.
  static const VerbLexicon& shipped();

  // All readings of a lowercase surface form ("put" is both base and past).
  std::vector<VerbReading> readings(std::string_view surface) const;
  bool is_verb_form(std::string_view surface) const;

  std::optional<std::string> inflect(std::string_view base, VerbForm form) const;

  // Surfaces that are overwhelmingly nouns directly after a determiner or
  // possessive even though they match a verb form ("hands", "books").
  bool noun_after_determiner(std::string_view surface) const;

  bool known_base(std::string_view base) const;

 private:
  VerbLexicon();

  void add_regular(std::string_view base);
  void add_irregular(std::string_view base, std::string_view third, std::string_view past,
                     std::string_view participle, std::string_view gerund);
  void index_form(std::string_view surface, std::string_view base, VerbForm form);

  std::map<std::string, std::map<VerbForm, std::string>> bases_;
  std::map<std::string, std::vector<VerbReading>> by_surface_;
  std::set<std::string> noun_after_det_;
};

// Regular spelling rules, exposed for the lexicon builder and tests.
std::string regular_third_singular(std::string_view base);
std::string regular_past(std::string_view base);
std::string regular_gerund(std::string_view base);

}  // namespace anionforge

#endif  // ANIONFORGE_VERBS_HPP_
