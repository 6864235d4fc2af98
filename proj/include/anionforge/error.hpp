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

#ifndef ANIONFORGE_ERROR_HPP_
#define ANIONFORGE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anionforge {

// Base class for all data-level failures. CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file content; carries a 1-based line number when known.
class FormatError : public DataError {
 public:
  FormatError(const std::string& what, std::int64_t line = -1)
      : DataError(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

// Why an event could not be negated. Rejections are expected outcomes for
// batch runs and are histogrammed rather than propagated.
enum class NegationReason {
  kUnparsableEvent,
  kCompoundEventRejected,
  kAlreadyNegated,
  kCueIncompatible,
};

std::string to_string(NegationReason reason);

class NegationError : public DataError {
 public:
  NegationError(NegationReason reason, const std::string& detail)
      : DataError(to_string(reason) + ": " + detail), reason_(reason) {}

  NegationReason reason() const { return reason_; }

 private:
  NegationReason reason_;
};

}  // namespace anionforge

#endif  // ANIONFORGE_ERROR_HPP_
