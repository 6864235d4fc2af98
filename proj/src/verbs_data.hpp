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
// Shipped morphology tables consumed by VerbLexicon. Internal to src/.

#ifndef ANIONFORGE_SRC_VERBS_DATA_HPP_
#define ANIONFORGE_SRC_VERBS_DATA_HPP_

#include <cstddef>
#include <span>

namespace anionforge::verbs_data {

struct IrregularVerbRow {
  const char* base;
  const char* third;
  const char* past;
  const char* participle;
  const char* gerund;
};

std::span<const char* const> regular_bases();
std::span<const IrregularVerbRow> irregular_verbs();
// Bases whose final consonant doubles before -ed / -ing.
std::span<const char* const> doubling_bases();
// Verb-form surfaces that read as nouns directly after a determiner or
// possessive.
std::span<const char* const> noun_after_determiner();

}  // namespace anionforge::verbs_data

#endif  // ANIONFORGE_SRC_VERBS_DATA_HPP_
