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
// Pluggable binary plausibility scorer over patterned sentences, a hashed
// linear reference implementation trained with logistic loss, and the
// valid/invalid partition of generated candidates.

#ifndef ANIONFORGE_DISCRIMINATOR_HPP_
#define ANIONFORGE_DISCRIMINATOR_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "anionforge/contrast.hpp"
#include "anionforge/kg.hpp"

namespace anionforge {

class DiscriminatorModel {
 public:
  virtual ~DiscriminatorModel() = default;

  // Probability that the sentence expresses a plausible tuple, in [0,1].
  // Deterministic for a frozen model.
  virtual double score(const std::string& sentence) const = 0;

  virtual std::vector<double> score_batch(const std::vector<std::string>& sentences) const;

  // Free-form descriptor of the training set / provenance.
  virtual std::string metadata() const = 0;
};

// Sparse feature vector over a 2^18 hashed space.
struct HashedFeatures {
  std::vector<std::pair<std::uint32_t, float>> entries;  // sorted by index
};

inline constexpr std::uint32_t kFeatureDimension = 1u << 18;

// Hashed unigrams and bigrams of the sentence plus clause-pair products
// (tokens of the event clause crossed with tokens of the inference clause,
// split at the first sentence boundary). The cross features are what let a
// linear model tie tail plausibility to the head; bag features alone cannot
// express that interaction.
HashedFeatures extract_features(std::string_view sentence, std::uint64_t hash_seed);

class ReferenceLinearModel : public DiscriminatorModel {
 public:
  ReferenceLinearModel(std::vector<float> weights, double bias, std::uint64_t hash_seed,
                       std::string metadata, double threshold = 0.7);

  double score(const std::string& sentence) const override;
  std::string metadata() const override { return metadata_; }

  double bias() const { return bias_; }
  std::uint64_t hash_seed() const { return hash_seed_; }
  const std::vector<float>& weights() const { return weights_; }
  // Validity cutoff shipped with the model; partition callers may override.
  double threshold() const { return threshold_; }

  // Versioned JSON with sparse weights.
  void save(const std::string& path, std::string_view config_hash = {}) const;
  static ReferenceLinearModel load(const std::string& path);

 private:
  std::vector<float> weights_;
  double bias_ = 0.0;
  std::uint64_t hash_seed_ = 0;
  std::string metadata_;
  double threshold_ = 0.7;
};

struct TrainOptions {
  int epochs = 5;
  double learning_rate = 0.1;
  std::uint64_t hash_seed = 0x9e3779b97f4a7c15ULL;
};

struct TrainStats {
  double final_loss = 0.0;      // mean logistic loss over the last epoch
  double train_accuracy = 0.0;  // at probability 0.5
};

// Seeded SGD on the mean logistic loss. Requires both labels present.
ReferenceLinearModel train_reference(const std::vector<LabeledSample>& samples,
                                     const TrainOptions& options, std::uint64_t seed,
                                     TrainStats* stats = nullptr);

// Mean logistic loss and its gradient wrt (weights, bias). Double precision
// so finite-difference checks are meaningful.
double logistic_loss(const std::vector<double>& weights, double bias,
                     const std::vector<HashedFeatures>& features,
                     const std::vector<int>& labels);
void logistic_loss_gradient(const std::vector<double>& weights, double bias,
                            const std::vector<HashedFeatures>& features,
                            const std::vector<int>& labels,
                            std::vector<double>* grad_weights, double* grad_bias);

// Scores sentences through an external command: newline-delimited sentences
// on its stdin, one decimal probability per line on its stdout, strict 1:1.
class ExternalScorer : public DiscriminatorModel {
 public:
  explicit ExternalScorer(std::string command);

  double score(const std::string& sentence) const override;
  std::vector<double> score_batch(const std::vector<std::string>& sentences) const override;
  std::string metadata() const override { return "external:" + command_; }

 private:
  std::string command_;
};

struct ScoredCandidate {
  std::string tail;
  double logp = 0.0;        // generation score
  double perplexity = 1.0;  // generation perplexity
  double probability = 0.0; // discriminator probability
};

struct PartitionResult {
  Event event;
  RelationType relation = RelationType::kXIntent;
  std::vector<ScoredCandidate> all;      // original beam order
  std::vector<ScoredCandidate> valid;    // probability >= threshold, order kept
  std::vector<ScoredCandidate> invalid;  // the rest, order kept
  double threshold = 0.7;
};

struct GenerationCandidate {
  std::string tail;
  double logp = 0.0;
  double perplexity = 1.0;
};

// Renders each candidate as a patterned sentence, scores it, and splits the
// beam at the threshold (>= means valid). Relative order is preserved.
PartitionResult partition(const DiscriminatorModel& model, const Event& event,
                          RelationType relation,
                          const std::vector<GenerationCandidate>& candidates,
                          double threshold = 0.7);

// Partition JSONL: {"head","relation","threshold","candidates":[{"tail",
// "logp","ppl","prob","valid"}]}.
void save_partitions(const std::vector<PartitionResult>& partitions, std::ostream& out,
                     std::string_view config_hash = {});
std::vector<PartitionResult> load_partitions(const std::string& path);

}  // namespace anionforge

#endif  // ANIONFORGE_DISCRIMINATOR_HPP_
