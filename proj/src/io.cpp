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

#include "anionforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "anionforge/error.hpp"

namespace anionforge {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string config_hash(const Json& config) {
  const std::uint64_t h = fnv1a64(config.dump());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

void for_each_jsonl(std::istream& in,
                    const std::function<void(const Json&, std::int64_t)>& fn) {
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (record.is_object() && record.contains("_meta")) continue;
    fn(record, line_no);
  }
}

void for_each_jsonl_file(const std::string& path,
                         const std::function<void(const Json&, std::int64_t)>& fn) {
  std::ifstream in = open_input(path);
  for_each_jsonl(in, fn);
}

void write_jsonl_meta(std::ostream& out, std::string_view hash, std::string_view command) {
  if (hash.empty()) return;
  Json meta;
  meta["_meta"]["config_hash"] = std::string(hash);
  meta["_meta"]["command"] = std::string(command);
  out << meta.dump() << '\n';
}

std::optional<std::string> read_config_hash(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  if (line.rfind("#config_hash=", 0) == 0) {
    return line.substr(std::string("#config_hash=").size());
  }
  if (!line.empty() && line.front() == '{') {
    try {
      Json record = Json::parse(line);
      if (record.contains("_meta") && record["_meta"].contains("config_hash")) {
        return record["_meta"]["config_hash"].get<std::string>();
      }
      if (record.contains("config_hash") && record["config_hash"].is_string()) {
        return record["config_hash"].get<std::string>();
      }
    } catch (const Json::parse_error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string tsv_escape(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string tsv_unescape(std::string_view field, std::int64_t line) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out.push_back(field[i]);
      continue;
    }
    if (i + 1 >= field.size()) throw FormatError("dangling escape in TSV field", line);
    ++i;
    switch (field[i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default:
        throw FormatError(std::string("unknown escape \\") + field[i] + " in TSV field", line);
    }
  }
  return out;
}

std::vector<std::string> split_tsv_row(std::string_view line_text, std::int64_t line) {
  std::vector<std::string> fields;
  std::string_view rest = line_text;
  if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
  while (true) {
    const std::size_t tab = rest.find('\t');
    if (tab == std::string_view::npos) {
      fields.push_back(tsv_unescape(rest, line));
      break;
    }
    fields.push_back(tsv_unescape(rest.substr(0, tab), line));
    rest.remove_prefix(tab + 1);
  }
  return fields;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open output file: " + path);
  return out;
}

}  // namespace anionforge
