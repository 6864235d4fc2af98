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
// Conditional tail generation behind a pluggable interface: beam search with
// per-candidate log-probability and perplexity, plus a head-conditioned
// interpolated bigram reference model.

#ifndef ANIONFORGE_GENERATOR_HPP_
#define ANIONFORGE_GENERATOR_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "anionforge/discriminator.hpp"
#include "anionforge/kg.hpp"

namespace anionforge {

inline constexpr std::size_t kMaxTailTokens = 20;

class GeneratorModel {
 public:
  virtual ~GeneratorModel() = default;

  // Up to `beam` candidates sorted by descending log-probability.
  virtual std::vector<GenerationCandidate> generate(const Event& head, RelationType relation,
                                                    int beam) const = 0;

  // exp(-(1/|t|) sum log p(token)); always >= 1.
  virtual double perplexity(const Event& head, RelationType relation,
                            const std::string& tail) const = 0;
};

struct NGramOptions {
  double smoothing = 0.1;    // additive lambda
  double head_weight = 0.5;  // interpolation toward the head-conditioned term
  std::uint32_t head_buckets = 4096;
  std::uint64_t hash_seed = 0x517cf3ee6dcb0a31ULL;
};

// Per-relation bigram model over tail tokens, interpolated with a
// distribution conditioned on hashed head-token buckets. Maximum-likelihood
// counts with additive smoothing.
class ReferenceNGramModel : public GeneratorModel {
 public:
  using Options = NGramOptions;

  static ReferenceNGramModel train(const KnowledgeGraph& graph, Options options = {});

  // Zero-count model over an explicit vocabulary; every token distribution
  // is uniform. Used by calibration checks.
  static ReferenceNGramModel uniform_over(const std::vector<std::string>& vocabulary,
                                          Options options = {});

  std::vector<GenerationCandidate> generate(const Event& head, RelationType relation,
                                            int beam) const override;
  double perplexity(const Event& head, RelationType relation,
                    const std::string& tail) const override;

  // log P(token | prev, head, relation); tokens outside the vocabulary map
  // to the unknown marker.
  double token_logp(RelationType relation, const std::vector<std::string>& head_tokens,
                    std::string_view prev, std::string_view token) const;

  // Next-token distribution for a context; sums to 1 within 1e-9.
  std::map<std::string, double> next_distribution(RelationType relation,
                                                  const std::vector<std::string>& head_tokens,
                                                  std::string_view prev) const;

  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const Options& options() const { return options_; }

 private:
  ReferenceNGramModel() = default;

  std::uint32_t head_bucket(std::string_view token) const;
  int vocab_id(std::string_view token) const;

  Options options_;
  std::vector<std::string> vocab_;            // predictable tokens: words, <unk>, </s>
  std::map<std::string, int> vocab_ids_;
  // relation -> prev id -> token id -> count (prev id |vocab_| is <s>)
  std::vector<std::map<int, std::map<int, double>>> bigram_;
  std::vector<std::map<int, double>> bigram_totals_;
  // relation -> (bucket, prev id) -> token id -> count
  std::vector<std::map<std::pair<std::uint32_t, int>, std::map<int, double>>> head_counts_;
  std::vector<std::map<std::pair<std::uint32_t, int>, double>> head_totals_;
};

// Exact top-k by total log-probability via best-first enumeration over token
// sequences (length cap kMaxTailTokens). Exponential in the worst case; test
// and calibration use only.
std::vector<GenerationCandidate> enumerate_top_candidates(const ReferenceNGramModel& model,
                                                          const Event& head,
                                                          RelationType relation, int k);

// Candidates through an external command. Input line per prompt:
// "<head>\t<relation>\t<beam>"; output line: JSON
// {"candidates":[{"tail","logp","ppl"}]}, strict 1:1.
class ExternalGenerator : public GeneratorModel {
 public:
  explicit ExternalGenerator(std::string command);

  std::vector<GenerationCandidate> generate(const Event& head, RelationType relation,
                                            int beam) const override;
  double perplexity(const Event& head, RelationType relation,
                    const std::string& tail) const override;

 private:
  std::string command_;
};

struct Prompt {
  Event head;
  RelationType relation = RelationType::kXIntent;
};

struct GeneratedBeam {
  Prompt prompt;
  std::vector<GenerationCandidate> candidates;
};

// Candidate JSONL: {"head","relation","candidates":[{"tail","logp","ppl"}]}.
void save_candidates(const std::vector<GeneratedBeam>& beams, std::ostream& out,
                     std::string_view config_hash = {});
std::vector<GeneratedBeam> load_candidates(const std::string& path);

std::vector<Prompt> load_prompts(const std::string& path);

}  // namespace anionforge

#endif  // ANIONFORGE_GENERATOR_HPP_
