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
// Evaluation harness: precision-at-k over labeled beams, perplexity-pruned
// set comparison, BLEU-2, and the aggregated run report.

#ifndef ANIONFORGE_METRICS_HPP_
#define ANIONFORGE_METRICS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anionforge/discriminator.hpp"
#include "anionforge/io.hpp"
#include "anionforge/kg.hpp"

namespace anionforge {

// Total plausibility labeling over every evaluated candidate. A missing
// label is an error, never a default.
class LabelSource {
 public:
  enum class Provenance { kFile, kOracle };

  // TSV rows: head, relation, tail, label in {0,1}. Optional header.
  static LabelSource from_file(const std::string& path);
  static LabelSource from_oracle(
      std::function<int(const std::string& head, RelationType relation,
                        const std::string& tail)> oracle);

  // Throws DataError when no label exists for the triple.
  int label(const std::string& head, RelationType relation, const std::string& tail) const;

  Provenance provenance() const { return provenance_; }

 private:
  LabelSource() = default;

  Provenance provenance_ = Provenance::kFile;
  std::map<std::string, int> table_;
  std::function<int(const std::string&, RelationType, const std::string&)> oracle_;
};

// 100 * (#label=1 among the first k) / k.
double p_at_k(const std::vector<int>& labels, std::size_t k);

struct PrunedPrecision {
  double pruned_all = 0.0;  // precision of the |valid| lowest-perplexity all-set members
  double valid = 0.0;       // precision of the valid set
};

// Undefined when |valid| == 0; callers exclude such prompts and count them.
// Perplexity ties break by original beam order.
std::optional<PrunedPrecision> p_at_num_valid(const PartitionResult& partition,
                                              const LabelSource& labels);

// Sentence BLEU-2: geometric mean of modified 1- and 2-gram precision with
// brevity penalty against the closest reference length. Zero clipped counts
// fall back to 1e-9; hypotheses shorter than two tokens use unigram
// precision only.
double bleu2(const std::string& hypothesis, const std::vector<std::string>& references);

struct SetMetrics {
  double mean_size = 0.0;
  double mean_precision = 0.0;       // P@k with k = set size, averaged over prompts
  std::int64_t total_correct = 0;
  std::int64_t total_size = 0;
  std::optional<double> bleu2;       // only when references were supplied
};

struct MetricReport {
  std::int64_t prompts = 0;
  std::int64_t prompts_without_valid = 0;  // excluded from the pruned comparison
  SetMetrics all;
  SetMetrics valid;
  SetMetrics invalid;
  double pruned_all_precision = 0.0;  // P@{#valid} of the all set
  double valid_precision = 0.0;       // P@{#valid} of the valid set
  double improvement_pct = 0.0;       // 100 * (valid - pruned_all) / pruned_all
  double p_value = 1.0;
  bool significant_05 = false;  // *
  bool significant_01 = false;  // **
  std::int64_t permutations = 0;
  double alpha = 0.05;

  Json to_json() const;
  static MetricReport from_json(const Json& j);

  // Text table mirroring the per-set precision layout (#, BL2, P@k).
  std::string to_table() const;
};

struct EvalConfig {
  std::int64_t permutations = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  const KnowledgeGraph* references = nullptr;  // for BLEU-2; optional
};

// Aggregates per-prompt precision of the all/valid/invalid sets, the
// perplexity-pruned comparison, and a one-sided permutation test of
// valid vs pruned-all per-prompt precisions. Throws DataError on empty
// input or a missing label.
MetricReport evaluate_run(const std::vector<PartitionResult>& partitions,
                          const LabelSource& labels, const EvalConfig& config);

}  // namespace anionforge

#endif  // ANIONFORGE_METRICS_HPP_
