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

#include "anionforge/text.hpp"
#include "doctest.h"

using namespace anionforge;

TEST_SUITE_BEGIN("text");

TEST_CASE("normalize collapses whitespace, trims, lowercases") {
  CHECK(normalize_text("  X   eats ") == "x eats");
  CHECK(normalize_text("x eats") == "x eats");
  CHECK(normalize_text("PersonX Buys A Car") == "personx buys a car");
  CHECK(normalize_text("") == "");
  CHECK(normalize_text("   \t\n ") == "");
}

TEST_CASE("normalize is idempotent on random strings") {
  std::mt19937_64 rng(42);
  const std::string alphabet = "aA bB\tcC\nd.'-XY ";
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    const std::size_t len = rng() % 30;
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    const std::string once = normalize_text(s);
    CHECK(normalize_text(once) == once);
  }
}

TEST_CASE("split_ws keeps surfaces") {
  CHECK(split_ws("PersonX  plays\tthe piano") ==
        std::vector<std::string>{"PersonX", "plays", "the", "piano"});
  CHECK(split_ws("").empty());
}

TEST_CASE("feature tokens detach punctuation and lowercase") {
  CHECK(feature_tokens("X eats. As a result, X is full.") ==
        std::vector<std::string>{"x", "eats", ".", "as", "a", "result", ",", "x", "is",
                                 "full", "."});
}

TEST_SUITE_END();
