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

#include "anionforge/verbs.hpp"

#include <algorithm>
#include <array>

#include "verbs_data.hpp"

namespace anionforge {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool in_doubling_set(std::string_view base) {
  for (const char* b : verbs_data::doubling_bases()) {
    if (base == b) return true;
  }
  return false;
}

std::string doubled(std::string_view base) {
  std::string out(base);
  out.push_back(out.back());
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string regular_third_singular(std::string_view base) {
  std::string b(base);
  if (ends_with(b, "s") || ends_with(b, "x") || ends_with(b, "z") || ends_with(b, "ch") ||
      ends_with(b, "sh") || ends_with(b, "o")) {
    return b + "es";
  }
  if (b.size() >= 2 && b.back() == 'y' && !is_vowel(b[b.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ies";
  }
  return b + "s";
}

std::string regular_past(std::string_view base) {
  std::string b(base);
  if (ends_with(b, "e")) return b + "d";
  if (b.size() >= 2 && b.back() == 'y' && !is_vowel(b[b.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ied";
  }
  if (in_doubling_set(b)) return doubled(b) + "ed";
  return b + "ed";
}

std::string regular_gerund(std::string_view base) {
  std::string b(base);
  if (ends_with(b, "ie")) return b.substr(0, b.size() - 2) + "ying";
  if (ends_with(b, "e") && !ends_with(b, "ee")) return b.substr(0, b.size() - 1) + "ing";
  if (in_doubling_set(b)) return doubled(b) + "ing";
  return b + "ing";
}

VerbLexicon::VerbLexicon() {
  for (const auto& row : verbs_data::irregular_verbs()) {
    add_irregular(row.base, row.third, row.past, row.participle, row.gerund);
  }
  for (const char* base : verbs_data::regular_bases()) {
    if (!bases_.contains(std::string(base))) add_regular(base);
  }
  for (const char* surface : verbs_data::noun_after_determiner()) {
    noun_after_det_.insert(surface);
  }
}

const VerbLexicon& VerbLexicon::shipped() {
  static const VerbLexicon lexicon;
  return lexicon;
}

void VerbLexicon::add_regular(std::string_view base) {
  add_irregular(base, regular_third_singular(base), regular_past(base), regular_past(base),
                regular_gerund(base));
}

void VerbLexicon::add_irregular(std::string_view base, std::string_view third,
                                std::string_view past, std::string_view participle,
                                std::string_view gerund) {
  auto& forms = bases_[std::string(base)];
  forms[VerbForm::kBase] = std::string(base);
  forms[VerbForm::kThirdSingular] = std::string(third);
  forms[VerbForm::kPast] = std::string(past);
  forms[VerbForm::kPastParticiple] = std::string(participle);
  forms[VerbForm::kGerund] = std::string(gerund);
  index_form(base, base, VerbForm::kBase);
  index_form(third, base, VerbForm::kThirdSingular);
  index_form(past, base, VerbForm::kPast);
  index_form(participle, base, VerbForm::kPastParticiple);
  index_form(gerund, base, VerbForm::kGerund);
}

void VerbLexicon::index_form(std::string_view surface, std::string_view base, VerbForm form) {
  auto& readings = by_surface_[std::string(surface)];
  for (const VerbReading& r : readings) {
    if (r.base == base && r.form == form) return;
  }
  readings.push_back(VerbReading{std::string(base), form});
}

std::vector<VerbReading> VerbLexicon::readings(std::string_view surface) const {
  auto it = by_surface_.find(std::string(surface));
  if (it == by_surface_.end()) return {};
  return it->second;
}

bool VerbLexicon::is_verb_form(std::string_view surface) const {
  return by_surface_.contains(std::string(surface));
}

std::optional<std::string> VerbLexicon::inflect(std::string_view base, VerbForm form) const {
  auto it = bases_.find(std::string(base));
  if (it == bases_.end()) return std::nullopt;
  auto fit = it->second.find(form);
  if (fit == it->second.end()) return std::nullopt;
  return fit->second;
}

bool VerbLexicon::noun_after_determiner(std::string_view surface) const {
  return noun_after_det_.contains(std::string(surface));
}

bool VerbLexicon::known_base(std::string_view base) const {
  return bases_.contains(std::string(base));
}

}  // namespace anionforge
