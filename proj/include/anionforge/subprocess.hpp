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

#ifndef ANIONFORGE_SUBPROCESS_HPP_
#define ANIONFORGE_SUBPROCESS_HPP_

#include <string>
#include <vector>

namespace anionforge {

// Runs `command` through the shell, writes `input_lines` to its stdin (one
// per line), closes stdin, and returns stdout split into lines. Throws
// DataError on spawn failure, nonzero exit, or when `expect_lines` >= 0 and
// the output line count differs.
std::vector<std::string> run_line_filter(const std::string& command,
                                         const std::vector<std::string>& input_lines,
                                         long expect_lines = -1);

}  // namespace anionforge

#endif  // ANIONFORGE_SUBPROCESS_HPP_
