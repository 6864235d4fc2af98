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
// Streaming JSONL/TSV helpers shared by every artifact reader and writer.
// JSONL artifacts start with an optional {"_meta": ...} line; TSV artifacts
// with an optional "#key=value" comment line. Both carry the config hash of
// the producing command.

#ifndef ANIONFORGE_IO_HPP_
#define ANIONFORGE_IO_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace anionforge {

using Json = nlohmann::json;

// FNV-1a over the canonical dump of a JSON value; hex string. Used to stamp
// artifacts with the configuration that produced them.
std::string config_hash(const Json& config);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 14695981039346656037ULL);

// Calls `fn(record, line_number)` for each JSONL record, skipping blank and
// meta lines. Throws FormatError with the line number on parse failures.
void for_each_jsonl(std::istream& in,
                    const std::function<void(const Json&, std::int64_t)>& fn);
void for_each_jsonl_file(const std::string& path,
                         const std::function<void(const Json&, std::int64_t)>& fn);

void write_jsonl_meta(std::ostream& out, std::string_view config_hash,
                      std::string_view command);

// Config hash embedded in an artifact, if any. Understands both the JSONL
// meta line and the TSV comment form.
std::optional<std::string> read_config_hash(const std::string& path);

// TSV field escaping: backslash, tab, newline, carriage return.
std::string tsv_escape(std::string_view field);
std::string tsv_unescape(std::string_view field, std::int64_t line);
std::vector<std::string> split_tsv_row(std::string_view line_text, std::int64_t line);

std::ifstream open_input(const std::string& path);   // throws DataError
std::ofstream open_output(const std::string& path);  // throws DataError

}  // namespace anionforge

#endif  // ANIONFORGE_IO_HPP_
