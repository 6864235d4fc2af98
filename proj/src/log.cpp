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

#include "anionforge/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include "anionforge/text.hpp"

namespace anionforge {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("ANION_FORGE_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    const std::string value = to_lower(env);
    if (value == "debug") return LogLevel::kDebug;
    if (value == "info") return LogLevel::kInfo;
    if (value == "warn" || value == "warning") return LogLevel::kWarn;
    if (value == "error") return LogLevel::kError;
    if (value == "off" || value == "none") return LogLevel::kOff;
    return LogLevel::kWarn;
  }();
  return level;
}

void log(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) < static_cast<int>(log_level())) return;
  const char* tag = "";
  switch (level) {
    case LogLevel::kDebug: tag = "debug"; break;
    case LogLevel::kInfo: tag = "info"; break;
    case LogLevel::kWarn: tag = "warn"; break;
    case LogLevel::kError: tag = "error"; break;
    case LogLevel::kOff: return;
  }
  std::cerr << "[anion-forge " << tag << "] " << message << '\n';
}

}  // namespace anionforge
