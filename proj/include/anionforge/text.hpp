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

#ifndef ANIONFORGE_TEXT_HPP_
#define ANIONFORGE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace anionforge {

// Canonical form used for all exact-string matching: internal whitespace
// runs collapse to single spaces, ends are trimmed, ASCII letters are
// lowercased. Idempotent.
std::string normalize_text(std::string_view s);

// Whitespace-delimited tokens of the raw string, surfaces preserved.
std::vector<std::string> split_ws(std::string_view s);

// Tokens for feature extraction and n-gram modeling: normalized text with
// sentence punctuation (.,!?;:) detached as its own tokens.
std::vector<std::string> feature_tokens(std::string_view s);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

std::string to_lower(std::string_view s);

bool starts_with_vowel_letter(std::string_view word);

}  // namespace anionforge

#endif  // ANIONFORGE_TEXT_HPP_
